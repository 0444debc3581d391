import pytest

import cutq

B6 = [(0, 1, 1), (0, 2, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (3, 5, 1), (4, 5, 1)]


def b6():
    return cutq.Graph(6, B6)


def test_graph_roundtrip(tmp_path):
    g = b6()
    assert (g.n, g.m) == (6, 7)
    assert g.cut([0, 1, 2]) == 1
    path = tmp_path / "b6.graph"
    g.save(str(path))
    assert cutq.Graph.load(str(path)) == g
    assert cutq.generate("two_cliques_bridge", 6) == g


def test_bad_input_raises_value_error():
    g = cutq.Graph(3)
    with pytest.raises(ValueError):
        g.add_edge(0, 0)
    g.add_edge(0, 1)
    with pytest.raises(ValueError):
        g.add_edge(1, 0)
    with pytest.raises(ValueError):
        cutq.generate("petersen", 10)


def test_mincut_b6_and_transcript_replay():
    g = b6()
    r = cutq.mincut(g, transcript=True)
    assert r["value"] == 1
    assert r["side"] == [0, 1, 2]
    assert r["cut_queries"] == len(r["transcript"])
    assert cutq.replay(g, r["transcript"]) == 0
    assert cutq.replay(cutq.generate("complete", 6), r["transcript"]) > 0


def test_mincut_matches_reference():
    for seed in range(10):
        g = cutq.generate("random_gnp", 20, seed=seed, p=0.3)
        assert cutq.mincut(g)["value"] == cutq.reference_mincut(g)[0]


def test_maxflow_and_isolating():
    k4 = cutq.generate("complete", 4)
    r = cutq.maxflow(k4, 0, 3)
    assert r["value"] == 3
    assert r["value"] == cutq.reference_maxflow(k4, 0, 3)
    assert r["distances"] == sorted(set(r["distances"]))
    iso = cutq.isolating_cuts(b6(), [0, 5], 1)
    assert iso["found"] and iso["values"][0] == 1


def test_domset_and_decompose():
    g = b6()
    R = cutq.dominating_set(g)["set"]
    assert cutq.separation_check(g, R, 1)
    d = cutq.decompose(cutq.generate("complete", 8), list(range(8)), 1, phi=0.25)
    assert sorted(v for p in d["parts"] for v in p["V"]) == list(range(8))


def test_config_and_bench():
    cfg = cutq.Config.parse("phi=0.25\nzeta=0.75")
    assert cfg.phi == 0.25 and cfg.to_dict()["zeta"] == "0.75"
    rows, slopes = cutq.bench(["complete"], [8, 16, 32], config=cutq.Config.desk())
    assert [r["answer"] for r in rows] == [7, 15, 31]
    assert all(r["answer"] == r["reference_answer"] for r in rows)
    assert slopes[("complete", "mincut")] < 2.0
