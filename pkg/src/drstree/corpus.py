"""Test and sweep corpora: exhaustive small systems and seeded random ones."""
from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .core import Rule, RuleSystem

SMALL_ATTRS = (1, 2, 3)


def _lhs_space(attrs=SMALL_ATTRS, values=(0, 1)):
    """Every left-hand side over ``attrs``: each attribute absent or one value."""
    out = []
    for combo in itertools.product((None,) + tuple(values), repeat=len(attrs)):
        out.append(tuple((a, v) for a, v in zip(attrs, combo) if v is not None))
    return out


def _symmetries(attrs=SMALL_ATTRS):
    """Attribute permutations combined with per-attribute 0/1 swaps."""
    out = []
    for perm in itertools.permutations(attrs):
        for flips in itertools.product((0, 1), repeat=len(attrs)):
            amap = dict(zip(attrs, perm))
            fmap = dict(zip(attrs, flips))
            out.append((amap, fmap))
    return out


def _canonical_key(blocks, syms):
    """Smallest image of a partition of left-hand sides under ``syms``."""
    best = None
    for amap, fmap in syms:
        image = tuple(sorted(
            tuple(sorted(tuple(sorted((amap[a], v ^ fmap[a]) for a, v in lhs)) for lhs in block))
            for block in blocks
        ))
        if best is None or image < best:
            best = image
    return best


@lru_cache(maxsize=None)
def small_systems(max_rules: int = 3) -> tuple[RuleSystem, ...]:
    """All systems over a1..a3 with values {0,1} and at most ``max_rules`` rules,
    one representative per class under renaming attributes, swapping the two
    values of an attribute, and renaming decisions."""
    space = _lhs_space()
    syms = _symmetries()
    seen: set = set()
    out: list[RuleSystem] = []
    for size in range(1, max_rules + 1):
        for lhss in itertools.combinations(space, size):
            for labels in _partitions(size):
                blocks = {}
                for lhs, lab in zip(lhss, labels):
                    blocks.setdefault(lab, []).append(lhs)
                key = _canonical_key(blocks.values(), syms)
                if key in seen:
                    continue
                seen.add(key)
                rules = [Rule(lhs, rhs) for rhs, block in enumerate(key) for lhs in block]
                out.append(RuleSystem(rules))
    return tuple(out)


def _partitions(size: int):
    """Restricted growth strings: block labels with first occurrences in order."""
    def rec(prefix, top):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for lab in range(top + 2):
            yield from rec(prefix + [lab], max(top, lab))

    yield from rec([0], 0)


def random_system(rng: random.Random, max_attrs: int = 4, max_values: int = 3,
                  max_rules: int = 4, max_len: int = 3, max_rhs: int = 3) -> RuleSystem:
    """A random system; attributes and values are drawn from small ranges."""
    size = rng.randint(1, max_rules)
    rules: list[Rule] = []
    seen: set[Rule] = set()
    while len(rules) < size:
        length = rng.randint(0, min(max_len, max_attrs))
        attrs = rng.sample(range(1, max_attrs + 1), length)
        rule = Rule([(a, rng.randrange(max_values)) for a in attrs], rng.randrange(max_rhs))
        if rule not in seen:
            seen.add(rule)
            rules.append(rule)
    return RuleSystem(rules)


def random_systems(count: int = 200, seed: int = 0, **kw) -> list[RuleSystem]:
    rng = random.Random(seed)
    return [random_system(rng, **kw) for _ in range(count)]


def random_k1_system(rng: random.Random, max_attrs: int = 5, max_rules: int = 5) -> RuleSystem:
    """Random system in which every attribute takes a single value (k(S)=1)."""
    n = rng.randint(1, max_attrs)
    value = {a: rng.randrange(3) for a in range(1, n + 1)}
    rules: list[Rule] = []
    seen: set[Rule] = set()
    for _ in range(rng.randint(1, max_rules) * 4):
        attrs = sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))
        rule = Rule([(a, value[a]) for a in attrs], rng.randrange(3))
        if rule not in seen:
            seen.add(rule)
            rules.append(rule)
        if len(rules) >= max_rules:
            break
    return RuleSystem(rules)


def random_d1_system(rng: random.Random, max_attrs: int = 4, max_values: int = 3,
                     max_rules: int = 5, allow_empty_rule: bool = True) -> RuleSystem:
    """Random system whose rules have at most one condition (d(S) <= 1)."""
    size = rng.randint(1, max_rules)
    rules: list[Rule] = []
    seen: set[Rule] = set()
    while len(rules) < size:
        if allow_empty_rule and rng.random() < 0.1:
            rule = Rule([], rng.randrange(3))
        else:
            rule = Rule([(rng.randint(1, max_attrs), rng.randrange(max_values))], rng.randrange(3))
        if rule not in seen:
            seen.add(rule)
            rules.append(rule)
    if all(len(r) == 0 for r in rules):
        rules.append(Rule([(1, 0)], 0))
    return RuleSystem(rules)


def random_splus(rng: random.Random, max_attrs: int = 8, max_len: int = 3, max_rules: int = 8) -> RuleSystem:
    """Random system whose rules all have the same positive length."""
    d = rng.randint(1, min(max_len, max_attrs))
    size = rng.randint(1, max_rules)
    rules: list[Rule] = []
    seen: set[Rule] = set()
    for _ in range(size * 4):
        attrs = rng.sample(range(1, max_attrs + 1), d)
        rule = Rule([(a, rng.randrange(2)) for a in attrs], rng.randrange(2))
        if rule not in seen:
            seen.add(rule)
            rules.append(rule)
        if len(rules) >= size:
            break
    return RuleSystem(rules)
