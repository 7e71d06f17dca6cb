import pytest

from drstree.core import STAR, DrsError, ValueTuple
from drstree.textio import parse
from drstree.trees import (
    DecisionGraph,
    DecisionGraphWithWriting,
    DecisionTree,
    EvaluationError,
    Sink,
    Terminal,
    Working,
    Writing,
    eval_tree,
    metrics,
    postorder,
    prune_star,
    walk,
)

S = parse("(a1=0)&(a2=1)->1; (a1=1)->2; (a2=0)->3")


def leaf(*rules):
    return Terminal(frozenset(rules))


def sample_tree():
    inner = Working(2, {0: leaf(), 1: leaf(0)})
    return DecisionTree(Working(1, {1: leaf(1), 0: inner}), S, "o")


def test_edges_sorted_and_walk_order():
    tree = sample_tree()
    assert list(tree.root.edges) == [0, 1]
    assert [type(n).__name__ for n in walk(tree.root)] == ["Working", "Working", "Terminal", "Terminal", "Terminal"]
    assert postorder(tree.root)[-1] is tree.root


def test_metrics():
    m = metrics(sample_tree())
    assert (m.h, m.L, m.T) == (2, 5, 3)


def test_complete_paths_and_evaluation():
    tree = sample_tree()
    paths = list(tree.complete_paths())
    assert [p.depth for p in paths] == [2, 2, 1]
    path, label = eval_tree(tree, ValueTuple.of({1: 0, 2: 1}))
    assert label == {0}
    assert [str(e) for e in path.steps] == ["a1=0", "a2=1"]
    assert path.attributes == {1, 2}


def test_o_tree_refuses_star():
    with pytest.raises(EvaluationError):
        sample_tree().evaluate(ValueTuple.of({1: STAR, 2: 0}))


def test_e_tree_follows_star():
    root = Working(1, {0: leaf(), 1: leaf(1), STAR: leaf()})
    tree = DecisionTree(root, S, "e")
    assert tree.evaluate(ValueTuple.of({1: 7, 2: 0})) == frozenset()
    assert metrics(prune_star(tree)).L == 3


def test_wrong_edge_set_rejected():
    with pytest.raises(DrsError):
        DecisionTree(Working(1, {0: leaf()}), S, "o")
    with pytest.raises(DrsError):
        DecisionTree(Working(1, {0: leaf(), 1: leaf()}), S, "e")
    with pytest.raises(DrsError):
        DecisionTree(Working(9, {0: leaf()}), S, "o")


def test_unknown_rule_in_label_rejected():
    with pytest.raises(DrsError):
        DecisionTree(leaf(5), S, "o")


def test_shared_child_only_in_graphs():
    shared = leaf()
    root = Working(1, {0: shared, 1: shared})
    with pytest.raises(DrsError):
        DecisionTree(root, S, "o")
    graph = DecisionGraph(root, S, "o")
    assert len(graph.nodes) == 2


def test_cycle_rejected():
    a = Working(1, {})
    b = Working(2, {0: a, 1: leaf()})
    a.edges = {0: b, 1: leaf()}
    with pytest.raises(DrsError):
        DecisionGraph(a, S, "o")


def test_writing_graph():
    sink = Sink()
    w = Writing(1, sink)
    root = Working(1, {0: sink, 1: w, STAR: sink})
    g = DecisionGraphWithWriting(root, S, "e")
    assert g.evaluate(ValueTuple.of({1: 1, 2: 0})) == {1}
    assert g.evaluate(ValueTuple.of({1: STAR, 2: 0})) == frozenset()
    assert metrics(g).T == 1


def test_writing_graph_needs_one_sink():
    root = Working(1, {0: Sink(), 1: Sink()})
    with pytest.raises(DrsError):
        DecisionGraphWithWriting(root, S, "o")
    with pytest.raises(DrsError):
        DecisionGraphWithWriting(leaf(), S, "o")


def test_prune_star_needs_e_tree():
    with pytest.raises(DrsError):
        prune_star(sample_tree())


def test_bad_flavor():
    with pytest.raises(DrsError):
        DecisionTree(leaf(), S, "x")
