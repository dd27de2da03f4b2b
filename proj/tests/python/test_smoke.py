import torq


def a3_pair():
    cat = torq.linear_a(3)
    return torq.explicit_pair(
        cat, torsion=["[2,2]"], free=["[1,1]", "[1,2]", "[1,3]", "[3,3]"]
    )


def test_indecomposable_counts():
    assert len(torq.indecomposables(torq.linear_a(3))) == 6
    assert len(torq.indecomposables(torq.tube(5, 3))) == 15


def test_hom_ext_tau():
    t5 = torq.tube(5, 12)
    assert torq.hom_dim(t5, "[0,9]", "[0,9]") == 2
    assert torq.ext_dim(t5, "[1,1]", "[0,0]") == 1
    assert torq.tau(t5, "[0,0]") == "[4,4]"
    a3 = torq.linear_a(3)
    assert torq.tau(a3, "[1,3]") is None
    seq = torq.ar_sequence(t5, "[1,3]")
    assert seq == {"sub": "[0,2]", "mid": "[1,2] + [0,3]", "quot": "[1,3]"}


def test_linear_example_pair():
    pair = a3_pair()
    assert pair.membership("[2,2]") == "torsion"
    assert pair.membership("[2,3]") == "neither"
    assert pair.verify(3)["passed"]
    assert pair.torsion_sequence("[2,3]") == {
        "sub": "[2,2]",
        "mid": "[2,3]",
        "quot": "[3,3]",
    }
    assert pair.functor_f("[2,3]") == "[3,3]"
    assert pair.functor_c("[3,3]") == "[2,3]"
    eq = pair.verify_equivalence(3)
    assert eq["passed"]
    assert "[2,3] <-> [3,3]" in eq["witnesses"]
    assert pair.verify_ff_corollary(3)["passed"]
    assert pair.verify_lwc_triple(3)["passed"]


def test_tube_case2_builtin():
    pair = torq.builtin_pair("tube5-case2-paper")
    assert pair.membership("[1,5]") == "torsion"
    assert pair.membership("[1,4]") == "free"
    assert sorted(pair.script_e_slice(10)) == ["[2,2]", "[2,3]", "[2,4]", "[4,4]"]
    no = pair.admits_universal_extension("[1,4]", 10)
    assert not no["admits"]
    assert "unbounded obstruction" in no["certificate"]
    assert pair.verify_ideal_identity(10)["passed"]


def test_tube_case1_builtin():
    pair = torq.builtin_pair("tube5-case1-paper")
    ue = pair.minimal_universal_extension("[4,6]")
    assert ue == {"sub": "[1,3]", "mid": "[1,6]", "quot": "[4,6]"}
    assert pair.verify_equivalence(8)["passed"]
    ff = pair.is_functorially_finite()
    assert not ff["value"] and "ambient" in ff["reason"]


def test_enumeration_counts():
    assert [torq.enumerate_count(n) for n in range(1, 5)] == [2, 5, 14, 42]


def test_cli_roundtrip_and_determinism():
    code, out, err = torq.run_cli(["verify", "a3-paper", "--format", "structured"])
    assert code == 0 and err == ""
    code2, out2, _ = torq.run_cli(["verify", "a3-paper", "--format", "structured"])
    assert out == out2
    bad, _, msg = torq.run_cli(["enumerate", "--n", "9"])
    assert bad == 2 and "1..6" in msg


def test_figure():
    fig = torq.figure("a3-paper")
    assert "l= 3" in fig and "#" in fig
