import math

import pytest

from nu_lgi import units


def test_angle_conversion_with_pi_multiplier():
    explicit = units.angle_to_rad("0.187pi")
    assert explicit.unit == "rad"
    assert explicit.value == pytest.approx(0.187 * math.pi)
    assert explicit.assumed_unit is False

    assert units.angle_to_rad("0.25*pi").value == pytest.approx(math.pi / 4)
    assert units.angle_to_rad("pi").value == pytest.approx(math.pi)
    assert units.angle_to_rad("90 deg").value == pytest.approx(math.pi / 2)

    assumed = units.angle_to_rad(0.5)
    assert assumed.value == pytest.approx(0.5)
    assert assumed.assumed_unit is True


def test_energy_prefixes_are_case_sensitive():
    assert units.energy_to_ev("2 eV").value == pytest.approx(2.0)
    assert units.energy_to_ev("3 meV").value == pytest.approx(3e-3)
    assert units.energy_to_ev("1 MeV").value == pytest.approx(1e6)
    with pytest.raises(units.UnitConversionError):
        units.energy_to_ev("1 mev")


def test_mass_squared_and_inverse_time():
    assert units.mass_squared_to_ev2("7.54e-5 eV^2").value == pytest.approx(7.54e-5)
    assert units.mass_squared_to_ev2("75.4 meV^2").value == pytest.approx(7.54e-5)
    tau = units.time_to_inverse_ev("0.1")
    assert tau.value == pytest.approx(0.1)
    assert tau.unit == "1/eV"
    assert tau.assumed_unit is True


def test_malformed_quantities_are_rejected():
    for bad in ("", "abc def", "1.2.3", "0.1 furlong"):
        with pytest.raises(units.UnitConversionError):
            units.angle_to_rad(bad)
    with pytest.raises(units.UnitConversionError):
        units.energy_to_ev({"value": 1.0, "unit": "eV"})
    with pytest.raises(units.UnitConversionError):
        units.energy_to_ev(True)
