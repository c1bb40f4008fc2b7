import json

import topoglyph as tg


def test_rotation_systems():
    assert tg.enumerate_good(4) == "8"
    assert tg.is_good(tg.convex(6))
    assert tg.is_good(tg.twisted(6))
    conv4 = tg.convex(4)
    assert tg.is_realizable4(conv4)
    cls = tg.classify_quadruple(conv4)
    assert cls["tag"] in {"H1", "H2", "H3", "H4", "H1R", "H2R", "H3R", "H4R"}


def test_extend_good():
    rep = tg.extend_good(tg.convex(4))
    assert int(rep["count"]) > 0
    assert all(len(rot) == 4 for rot in rep["allowed_rotations"])


def test_chord_counts():
    row = tg.chord_counts(3)
    assert row[0] == "5"
    assert sum(int(v) for v in row.values()) == 15


def test_arrangements():
    order = ["a1", "a2", "b1", "b2"]
    classes = [json.loads(s) for s in tg.arr_enumerate(order)]
    assert len(classes) == 1
    assert classes[0]["crossing_orders"] == {"1": [2], "2": [1]}
    bits = tg.arr_encode(json.dumps(classes[0]))
    decoded = json.loads(tg.arr_decode(order, 0, bits))
    assert decoded == classes[0]


def test_drawings():
    points = [(0, 0), (6, 0), (7, 5), (1, 6)]
    edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    d = tg.from_points(points, edges)
    ok, message = tg.validate_drawing(d)
    assert ok, message
    at = json.loads(tg.at_graph(d))
    assert at["crossing_pairs"] == [[[1, 3], [2, 4]]]
    assert tg.weak_iso(d, d)
    assert tg.is_isomorphic(d, d)
    tree = json.loads(tg.spanning_tree(d))
    assert len(tree["arcs"]) >= 3
    trep = json.loads(tg.t_representation(d))
    assert trep["polygon_size"] >= 1


def test_k2n_family():
    assert tg.k2n_family_size(6) == 8


def test_bounds():
    assert tg.tutte_maps(2) == "9"
    assert tg.walsh_lehman_loopless(1) == "1"
    assert tg.mullin_schellenberg(1, 0) == "3"
    assert tg.arrangement_bound(2, 1) == "70"
    assert tg.inverse_ackermann(16) == 3
    assert tg.alpha_d(1, 8) == 4
    assert tg.cross_variance(3, [(1, 2), (2, 3)], 2) == "1/2"
    k8 = [(u, v) for u in range(1, 9) for v in range(u + 1, 9)]
    cluster = tg.find_partition(8, k8, 6, 3, [(1, 2), (3, 4), (5, 6)], 42)
    assert cluster is not None
    assert all(1 <= c <= 6 for c in cluster[1:])
