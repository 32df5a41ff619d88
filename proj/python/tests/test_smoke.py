import pytest

import tategb

SYSTEM = "p=5 prec=3 vars=x,y\n---\nx + 5\ny\n"


def test_gb_small_system():
    out = tategb.gb(SYSTEM)
    assert out["basis"] == ["x + 5", "y"]
    stats = out["stats"]
    assert stats["skipped_cover"] + stats["skipped_sig"] + stats["reductions"] == stats["jpairs_popped"]


@pytest.mark.parametrize("seed", range(5))
def test_engines_agree_and_verify(seed):
    system = tategb.gen_random(seed=seed, p=3, prec=4, vars=2, gens=3)
    bases = {algo: tategb.gb(system, algo=algo)["text"] for algo in ("buchberger", "pote", "vapote")}
    assert bases["pote"] == bases["buchberger"] == bases["vapote"]
    ok, why = tategb.verify(system, bases["vapote"], membership=True)
    assert ok, why


def test_interrupt_and_monic_options():
    system = tategb.gen_torsion(p=5, ell=3, prec=4)
    reference = tategb.gb(system)["basis"]
    assert tategb.gb(system, interrupt=True)["basis"] == reference
    assert tategb.gb(system, monic_signatures=False)["basis"] == reference


def test_verify_rejects_a_dropped_element():
    system = tategb.gen_torsion(p=5, ell=3, prec=3)
    text = tategb.gb(system)["text"]
    dropped = text.rstrip("\n").rsplit("\n", 1)[0] + "\n"
    ok, why = tategb.verify(system, dropped)
    assert not ok
    assert why


def test_errors():
    with pytest.raises(tategb.ParseError, match="column"):
        tategb.gb("p=5 prec=3 vars=x\n---\nx^-1\n")
    with pytest.raises(tategb.TateError):
        tategb.gb("p=6 prec=3 vars=x\n---\nx\n")
    with pytest.raises(tategb.TateError):
        tategb.gen_torsion(p=3)
    with pytest.raises(tategb.TateError):
        tategb.gb(SYSTEM, algo="f4")
    assert issubclass(tategb.ParseError, tategb.TateError)


def test_gen_random_is_deterministic():
    assert tategb.gen_random(seed=9) == tategb.gen_random(seed=9)
    assert tategb.gen_random(seed=9) != tategb.gen_random(seed=10)
