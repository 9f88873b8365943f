import _oramsey as ora


def test_graph_roundtrip():
    g = ora.graph("n=5;e=1-2,2-4")
    assert g.n == 5
    assert g.dsl() == "n=5;e=1-2,2-4"
    assert ora.graph(g.mirror().dsl()).mirror() == g


def test_arrows_chord_host():
    host = ora.graph("n=5;e=1-2,2-3,3-4,4-5,2-4")
    p3 = ora.monotone_path(3)
    assert ora.arrows(host, p3, p3)["verdict"] == "ARROWS"
    bare = ora.monotone_path(5)
    cert = ora.arrows(bare, p3, p3)
    assert cert["verdict"] == "NOT_ARROWS"
    assert ora.check_refutation(bare, cert["witness"], p3, p3)


def test_enumerate_unique_star():
    s2 = ora.right_star(2)
    result = ora.enumerate_minimal(s2, s2, 5)
    assert result["complete"]
    assert [g.dsl() for g in result["graphs"]] == ["n=4;e=1-2,1-3,1-4"]


def test_densities():
    k3 = ora.complete_graph(3)
    assert ora.density_m(k3) == (1, 1)
    assert ora.density_m2(k3) == (2, 1)
    assert ora.density_m2_total(ora.complete_graph(2)) == (1, 2, True)


def test_classifiers():
    p3 = ora.monotone_path(3)
    v = ora.ramsey_forest_case(p3, p3)
    assert v["answer"] == "NO"
    assert ora.ramsey_finite_connected(ora.right_star(4))["answer"] == "YES"
    cat = ora.build_caterpillar([2, 1, 1])
    assert ora.caterpillar_pair_verdict(ora.right_star(2), cat)["answer"] == "NO"


def test_refuter_is_checked():
    p3 = ora.monotone_path(3)
    f = ora.monotone_path(5)
    coloring = ora.refute_forest(f, p3, p3, 3)
    assert coloring is not None
    assert ora.check_refutation(f, coloring, p3, p3)


def test_gnp_deterministic():
    a = ora.sample_gnp(9, 0.4, 17)
    b = ora.sample_gnp(9, 0.4, 17)
    assert a == b
    rows = ora.run_threshold_scan(ora.monotone_path(3), 8, [0.0, 1.0], 10, seed=5)
    assert rows[0]["arrows"] == 0
    assert rows[1]["arrows"] == 10


def test_determiner_verification():
    d = ora.left_determiner(2, [1, 1], 2)
    assert d.n == 7
    assert ora.verify_determiner(d, 2, [1, 1], 2, 0, "left")["ok"]
