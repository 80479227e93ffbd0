import pytest
from fractions import Fraction

from slicetree.errors import FracLatticeError, MarkingNotInTable
from slicetree.fracs import (
    Frac12,
    KodairaType,
    SlicingPair,
    allowed_klt_markings,
    frac,
    is_klt_marking,
    kodaira_of_marking,
    slicing_of_kodaira,
)

TABLE = {
    KodairaType.I: "0",
    KodairaType.II: "1/6",
    KodairaType.III: "1/4",
    KodairaType.IV: "1/3",
    KodairaType.I_STAR: "1/2",
    KodairaType.IV_STAR: "2/3",
    KodairaType.III_STAR: "3/4",
    KodairaType.II_STAR: "5/6",
}


def test_table_values():
    for kod, s in TABLE.items():
        assert str(slicing_of_kodaira(kod)) == s


def test_table_round_trip():
    for kod in KodairaType:
        if kod is KodairaType.I:
            continue  # slicing 0 is not a marking
        assert kodaira_of_marking(slicing_of_kodaira(kod)) is kod


def test_marking_not_in_table():
    with pytest.raises(MarkingNotInTable):
        kodaira_of_marking(frac("5/12"))
    with pytest.raises(MarkingNotInTable):
        kodaira_of_marking(frac(1))


def test_allowed_klt_markings():
    vals = sorted(str(m) for m in allowed_klt_markings())
    assert vals == sorted(["1/6", "1/4", "1/3", "1/2", "2/3", "3/4", "5/6"])
    assert is_klt_marking(frac("1/2"))
    assert not is_klt_marking(frac("1/12"))
    assert not is_klt_marking(frac(0))
    assert not is_klt_marking(frac(1))


def test_parse_and_str():
    assert str(frac("5/6")) == "5/6"
    assert str(frac("10/12")) == "5/6"
    assert str(frac("0")) == "0"
    assert str(frac(2)) == "2"
    assert str(frac("-7/4")) == "-7/4"
    assert frac("13/12").twelfths == 13


def test_off_lattice_rejected():
    with pytest.raises(FracLatticeError):
        frac("1/5")
    with pytest.raises(FracLatticeError):
        Frac12(1, 24)
    # reducible to the lattice is fine
    assert Frac12(2, 24).twelfths == 1


def test_arithmetic():
    a = frac("5/6")
    b = frac("1/4")
    assert (a + b).twelfths == 13
    assert (a - b) == frac("7/12")
    assert a + 1 == frac("11/6")
    assert 1 - a == frac("1/6")
    assert -a == frac("-5/6")
    assert a > b
    assert frac("1/2") == Frac12(6, 12)
    assert a.as_fraction() == Fraction(5, 6)
    assert not a.is_integer()
    assert frac(3).is_integer()


def test_hash_consistent_with_eq():
    assert hash(frac("1/2")) == hash(Frac12(6, 12))
    s = {frac("1/2"), Frac12(1, 2)}
    assert len(s) == 1


def test_slicing_pair():
    p = SlicingPair(frac("1/6"), frac("5/6"))
    assert p.swapped() == SlicingPair(frac("5/6"), frac("1/6"))
    with pytest.raises(FracLatticeError):
        SlicingPair(frac("1/2"), frac("1/6"))  # does not sum to 1
    with pytest.raises(FracLatticeError):
        SlicingPair(frac("1/12"), frac("11/12"))  # not in the table
