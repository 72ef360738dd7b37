"""Functorial values, star composites, gamma series and heights."""

import pytest

from fitlab.builders import build_group
from fitlab.errors import (
    InvalidParameter,
    InvalidPrime,
    LatticeCapExceeded,
    StepBudgetExceeded,
)
from fitlab.functorials import (
    UNBOUNDED,
    builtin_functorial,
    check_property,
    class_residual,
    gamma_series,
    hstar_height,
    htilde_height,
    lambda_height,
    named_heights,
    p_height_functorial,
    star,
)


def test_builtin_values(G):
    g = G("S4")
    assert builtin_functorial("Fit")(g).order == 4
    assert builtin_functorial("Z")(g).order == 1
    assert builtin_functorial("Soc")(g).order == 4
    assert builtin_functorial("Fstar")(g).order == 4
    assert builtin_functorial("Rsol")(g).order == 24
    assert builtin_functorial("Op", 2)(g).order == 4
    assert builtin_functorial("Op", 3)(g).order == 1
    assert builtin_functorial("Rp", 2)(g).order == 24
    assert builtin_functorial("Phi")(g).order == 1


def test_atom_prime_handling():
    with pytest.raises(InvalidParameter):
        builtin_functorial("Fit", 2)
    with pytest.raises(InvalidParameter):
        builtin_functorial("Phi", 3)
    with pytest.raises(InvalidParameter):
        builtin_functorial("Op")
    with pytest.raises(InvalidPrime):
        builtin_functorial("Rp", 4)
    with pytest.raises(InvalidParameter):
        builtin_functorial("Borel")


def test_star_value_left_operand_first(G):
    g = G("S4")
    fit = builtin_functorial("Fit")
    composite = star(fit, fit)
    assert composite(g).order == 12  # Fit = V4, then Fit(S4/V4) pulled back
    assert composite.name == "Fit*Fit"
    assert (fit * fit)(g).order == 12


def test_star_shortcuts(G):
    fit = builtin_functorial("Fit")
    z = builtin_functorial("Z")
    # Base value is the whole group: composite stops there.
    c12 = G("C12")
    assert star(fit, z)(c12).order == 12
    # Base value trivial: composite is just the top functorial.
    a5 = G("A5")
    assert star(fit, fit)(a5).order == 1
    assert star(fit, builtin_functorial("Fstar"))(a5).order == 60


def test_star_flag_licensing():
    fit = builtin_functorial("Fit")
    phi = builtin_functorial("Phi")
    z = builtin_functorial("Z")
    fstar = builtin_functorial("Fstar")
    assert star(fit, fit).flags == frozenset(("F1", "F2", "F3"))
    assert star(phi, fstar).flags == frozenset(("F1", "F2"))
    assert star(z, fit).flags == frozenset()  # Z lacks F2
    assert star(fit, z).flags == frozenset()


def test_star_progress():
    fit = builtin_functorial("Fit")
    fstar = builtin_functorial("Fstar")
    soc = builtin_functorial("Soc")
    assert not star(fit, fit).guarantees_progress
    assert star(fit, fstar).guarantees_progress
    assert star(soc, fit).guarantees_progress
    assert fstar.guarantees_progress and soc.guarantees_progress
    assert not fit.guarantees_progress


def test_p_height_functorial_name():
    gamma = p_height_functorial(2)
    assert gamma.name == "Rp[2]*Fstar*Rp[2]"
    assert gamma.guarantees_progress


def test_fstar_series_on_s4(G):
    series = gamma_series(builtin_functorial("Fstar"), G("S4"))
    assert series.term_orders == (1, 4, 12, 24)
    assert series.height == 3
    assert not series.stalled


def test_fit_series_stalls_on_a5(G):
    series = gamma_series(builtin_functorial("Fit"), G("A5"))
    assert series.stalled
    assert series.height == UNBOUNDED
    assert series.term_orders == (1,)


def test_step_budget():
    g = build_group("S4")  # fresh instance: series cache must be cold
    with pytest.raises(StepBudgetExceeded):
        gamma_series(builtin_functorial("Fit"), g, max_steps=1)


def test_hstar_values(G):
    expected = {"C12": 1, "S3": 2, "S4": 3, "A5": 1, "S5": 2, "SL(2,5)": 1}
    for spec, value in expected.items():
        assert hstar_height(G(spec)) == value, spec


def test_hstar_fast_path_matches_series(G):
    fstar = builtin_functorial("Fstar")
    for spec in ("S3", "S4", "D6", "C12", "SL(2,3)"):
        g = G(spec)
        assert hstar_height(g) == gamma_series(fstar, g).height, spec


def test_htilde_values(G):
    assert htilde_height(G("S4")) == 3
    assert htilde_height(G("A5")) == 1
    assert htilde_height(G("S5")) == 2


def test_htilde_respects_lattice_cap(G):
    with pytest.raises(LatticeCapExceeded):
        htilde_height(G("PSL(2,7)"), lattice_cap=60)


def test_lambda_values(G):
    assert lambda_height(G("S4"), 2) == 0  # soluble, hence p-soluble
    assert lambda_height(G("A5"), 2) == 1
    assert lambda_height(G("A5"), 7) == 0  # order prime to 7
    assert lambda_height(G("S5"), 2) == 1
    assert lambda_height(G("SL(2,5)"), 5) == 1


def test_named_heights_s4(G):
    report = named_heights(G("S4"))
    assert report.h == 3
    assert report.hstar == 3
    assert report.htilde == 3
    assert report.lambdas == ((2, 0), (3, 0), (5, 0), (7, 0))


def test_named_heights_a5(G):
    report = named_heights(G("A5"))
    assert report.h == UNBOUNDED
    assert report.hstar == 1
    assert report.htilde == 1
    assert report.lambda_for(2) == 1
    assert report.lambda_for(7) == 0
    with pytest.raises(InvalidParameter):
        report.lambda_for(11)


def test_named_heights_htilde_none_over_cap(G):
    report = named_heights(G("PSL(2,7)"), lattice_cap=60)
    assert report.htilde is None
    assert report.hstar == 1


def test_residuals(G):
    g = G("S4")
    assert class_residual(g, "nilpotent").order == 12
    assert class_residual(g, "quasinilpotent").order == 12
    assert class_residual(g, "soluble").order == 1
    a5 = G("A5")
    assert class_residual(a5, "soluble").order == 60
    assert class_residual(a5, "quasinilpotent").order == 1
    assert class_residual(G("S3"), "nilpotent").order == 3


def test_residual_needs_prime_for_p_soluble(G):
    with pytest.raises(InvalidParameter):
        class_residual(G("S4"), "p-soluble")
    assert class_residual(G("S5"), "p-soluble", 2).order == 60


def test_property_phi_f3_fails_on_q8(G):
    phi = builtin_functorial("Phi")
    verdict = check_property("F3", phi, G("Q8"))
    assert not verdict.holds
    assert verdict.witness is not None
    assert verdict.witness.order == 2  # the centre; Phi of C2 is trivial


def test_property_z_f2_fails_on_s3(G):
    verdict = check_property("F2", builtin_functorial("Z"), G("S3"))
    assert not verdict.holds
    assert verdict.witness.order == 3


def test_property_fstar_holds(G):
    fstar = builtin_functorial("Fstar")
    for spec in ("S4", "Q8", "S5", "SL(2,3)"):
        for prop in ("F1", "F2", "F3"):
            assert check_property(prop, fstar, G(spec)).holds, (spec, prop)


def test_property_phi_f1_f2_hold_on_q8(G):
    phi = builtin_functorial("Phi")
    assert check_property("F1", phi, G("Q8")).holds
    assert check_property("F2", phi, G("Q8")).holds


def test_property_unknown_name(G):
    with pytest.raises(InvalidParameter):
        check_property("F4", builtin_functorial("Fit"), G("S3"))
