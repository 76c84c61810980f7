import pytest

import pylucid

NAT1 = "N @.d 2 where dimension d; N = 42 fby.d (N + 1); end"


def test_evaluate_nat1():
    assert pylucid.evaluate(NAT1) == 44


def test_compile_run_and_reload():
    prog = pylucid.compile(NAT1)
    assert prog.ast_count == 1
    direct = pylucid.run(prog)
    loaded = pylucid.run(pylucid.load(prog.serialize()))
    assert direct == loaded
    assert direct[0]["value"] == 44
    assert direct[0]["error"] is None


def test_capacities_and_transport_agree():
    prog = pylucid.compile(NAT1)
    results = {pylucid.run(prog, warehouse_capacity=c)[0]["value"] for c in (0, 4, None)}
    assert results == {44}
    assert pylucid.run(prog, socket=True)[0]["value"] == 44


def test_host_output_and_void():
    src = '#funcdecl\nvoid printLine(String);\n#JLUCID\nprintLine("hi")\n'
    [r] = pylucid.run(pylucid.compile(src))
    assert r["output"] == ["hi"]
    assert r["value"] is True


def test_records_and_arrays():
    src = "#typedecl\nNat42;\n#OBJECTIVELUCID\n[Nat42().n, Nat42().inc().n]\n"
    assert pylucid.evaluate(src) == [42, 43]
    car = pylucid.evaluate("#typedecl\nCar;\n#OBJECTIVELUCID\nCar()")
    assert car["__class__"] == "Car"
    assert car["x"] == 0


def test_errors_raise():
    with pytest.raises(pylucid.LucidError, match="UndefinedIdentifier"):
        pylucid.compile("x where y = 1; end")
    with pytest.raises(pylucid.LucidError, match="DivisionByZero"):
        pylucid.evaluate("1 / 0", dialect="gipl")
    with pytest.raises(ValueError):
        pylucid.evaluate("1", dialect="cobol")


def test_per_tree_errors_are_reported():
    [a, b] = pylucid.run(pylucid.compile("#GIPL\n1 + 1\n#GIPL\n1 / 0\n"))
    assert a["value"] == 2
    assert b["error"] == "DivisionByZero"


def test_translate_and_canonical():
    assert "fby" not in pylucid.translate("42 fby.d (N + 1)")
    assert pylucid.canonical("1 + 2 * 3", "gipl") == pylucid.canonical("1 + (2 * 3)", "gipl")


def test_warnings():
    prog = pylucid.compile("N where N = 1 fby N; end")
    assert len(prog.warnings) == 1
    assert "implicit dimension" in prog.warnings[0]
