import pytest

from zhulab.config import ConfigError, parse_config
from zhulab.linalg import Q
from zhulab.voa import verify_singular, VOA

LEE_YANG = """\
# Lee-Yang
voa.kind = virasoro
voa.central_charge = "-22/5"
quotient = L(-2)L(-2)|0> - 3/5 L(-4)|0>
"""


def test_minimal_heisenberg_defaults():
    cfg = parse_config("voa.kind = heisenberg-rank1\n")
    eff = cfg.effective()
    assert eff["cutoff"] == 4
    assert eff["caps.schedule"] == [6, 8, 10]
    assert eff["output.format"] == "json"
    assert eff["module.lambda"] == "3/2"


def test_lee_yang_config():
    cfg = parse_config(LEE_YANG)
    assert cfg.central_charge == Q(-22, 5)
    P = cfg.presentation(8)
    U = VOA("virasoro", 8, cfg.central_charge)
    from zhulab.expr import parse_vector
    assert verify_singular(U, parse_vector(cfg.quotient[0], U))
    assert P.dim(4) == 1


@pytest.mark.parametrize("text,line,col", [
    ("voa.kind = heisenberg-rank1\ncutoff = -1\n", 2, 10),
    ("voa.kind = heisenberg-rank1\nbogus = 1\n", 2, 1),
    ("voa.kind = virasoro\nvoa.central_charge = 1/0\n", 2, 22),
    ("voa.kind = virasoro\nvoa.central_charge = 1/2\nquotient = L(-2|0>\n", 3, 16),
    ("voa.kind = virasoro\nvoa.central_charge = 1/2\nquotient = L(-4)|0>\n", 3, 12),
    ("voa.kind = heisenberg-rank1\ncutoff\n", 2, 1),
])
def test_positioned_errors(text, line, col):
    with pytest.raises(ConfigError) as e:
        parse_config(text)
    assert (e.value.errors[0][0], e.value.errors[0][1]) == (line, col)


def test_empty_and_inconsistent():
    with pytest.raises(ConfigError, match="voa.kind"):
        parse_config("")
    with pytest.raises(ConfigError, match="central_charge"):
        parse_config("voa.kind = virasoro\n")
    with pytest.raises(ConfigError, match="duplicate"):
        parse_config("voa.kind = virasoro\nvoa.kind = virasoro\n")
    with pytest.raises(ConfigError, match="increasing"):
        parse_config("voa.kind = heisenberg-rank1\ncaps.schedule = 6, 4\n")
