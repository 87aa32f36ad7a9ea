from alglen import examples, identities
from alglen.identities import (check_alternative, check_descendingly_alternative,
                               check_descendingly_flexible, check_flexible,
                               check_left_sliding, check_mixing,
                               check_right_sliding, check_sufficient_condition,
                               classify, replay_witness)


def _witness_labels(algebra, verdict):
    return {name: algebra.format_element(c) for name, c in verdict.witness.elements}


def test_flexible_alternative_on_associative():
    m3 = examples.make_matrix_algebra(3)
    assert check_flexible(m3).kind == "holds-exhaustive"
    assert check_alternative(m3).kind == "holds-exhaustive"


def test_spin_factor_class(aflex):
    spin = examples.make_spin_factor(3)
    assert check_flexible(spin).kind == "holds-exhaustive"
    assert check_descendingly_flexible(spin).holds
    assert check_descendingly_alternative(spin).holds
    assert check_sufficient_condition(spin, "flex").holds
    assert check_sufficient_condition(spin, "alt").holds


def test_classification_matrix_aflex(aflex):
    report = classify(aflex)
    assert report.verdict("descendingly_flexible").holds
    da = report.verdict("descendingly_alternative")
    assert da.kind == "fails"
    assert _witness_labels(aflex, da) == {"a": "e1", "b": "e2"}
    assert da.witness.equation == "a(ab) in Lin_1(a,b,aa,ab,ba)"
    assert report.verdict("mixing").holds
    assert not report.warnings


def test_classification_matrix_aalt(aalt):
    report = classify(aalt)
    assert report.verdict("descendingly_alternative").holds
    df = report.verdict("descendingly_flexible")
    assert df.kind == "fails"
    assert _witness_labels(aalt, df) == {"a": "f1", "b": "f2"}
    assert df.witness.equation == "a(ba) in Lin_1(a,b,aa,ab,ba)"
    assert report.verdict("mixing").holds
    assert not report.warnings


def test_group_algebra_class(z2n2):
    report = classify(z2n2)
    assert report.verdict("descendingly_alternative").holds
    assert report.verdict("descendingly_flexible").holds
    assert report.verdict("sufficient_condition_alt").holds
    # characteristic 2 inflates the sample budget
    assert report.verdict("descendingly_flexible").samples \
        == identities.DEFAULT_SAMPLES * identities.CHAR2_SAMPLE_FACTOR


def test_chain3_sliding():
    c3 = examples.make_chain3()
    left = check_left_sliding(c3)
    assert left.kind == "fails"
    assert _witness_labels(c3, left) == {"x": "a", "y": "a", "z": "a"}
    # the combined monomial pool contains (xz)y = (aa)a, so mixing and
    # right sliding genuinely hold on this algebra
    assert check_right_sliding(c3).holds
    assert check_mixing(c3).holds


def test_nonmixing_negative_control():
    n7 = examples.make_nonmixing7()
    assert check_mixing(n7).kind == "fails"
    assert check_left_sliding(n7).kind == "fails"
    assert check_right_sliding(n7).kind == "fails"


def test_matrix4_descending_failures():
    m4 = examples.make_matrix_algebra(4)
    df = check_descendingly_flexible(m4, samples=4)
    da = check_descendingly_alternative(m4, samples=4)
    assert df.kind == "fails" and da.kind == "fails"
    assert _witness_labels(m4, df) == {"a": "E12", "b": "E23", "c": "E31"}
    # the triple of consecutive one-step matrix units is also a violation
    a, b, c = m4.basis_element(2), m4.basis_element(7), m4.basis_element(12)
    lhs = m4.add(m4.multiply(m4.multiply(a, b), c), m4.multiply(m4.multiply(c, b), a))
    span = identities.span_of(m4, identities._short_span_list(m4, a, b, c))
    assert not span.contains(lhs)


def test_witness_replay(aflex, aalt):
    for algebra in (aflex, aalt):
        report = classify(algebra, samples=8)
        for verdict in report.verdicts.values():
            if verdict.kind == "fails":
                elements = {k: v for k, v in verdict.witness.elements}
                assert replay_witness(algebra, verdict.witness), verdict.witness


def test_determinism(aalt):
    a = classify(aalt, seed=3, samples=16)
    b = classify(aalt, seed=3, samples=16)
    assert a.as_dict(aalt) == b.as_dict(aalt)


def test_implication_audit_consistency(small_registry):
    for name, algebra in small_registry.items():
        report = classify(algebra, samples=8)
        assert not report.warnings, (name, report.warnings)


def test_unital_hull_inherits_class(aflex, aalt):
    hull = examples.make_unital_hull(aflex)
    assert check_descendingly_flexible(hull, samples=16).holds
    hull = examples.make_unital_hull(aalt)
    assert check_descendingly_alternative(hull, samples=16).holds


def test_nilpotent_index3():
    nil = examples.make_nilpotent3()
    assert check_descendingly_flexible(nil, samples=16).holds
    assert check_descendingly_alternative(nil, samples=16).holds


def test_sufficient_condition_edge_cases(aflex):
    one_dim = examples.make_cayley_dickson(0, [])
    # dimension 1: the remaining monomials always span everything
    assert check_sufficient_condition(one_dim, "flex").kind == "inconclusive"
    bad = check_sufficient_condition(aflex, "alt")
    assert bad.kind == "fails"


def test_descending_checks_over_gf2(aflex_gf2, aalt_gf2):
    # over characteristic 2 the pair memberships are checked independently
    assert check_descendingly_flexible(aflex_gf2).holds
    assert check_descendingly_alternative(aflex_gf2).kind == "fails"
    assert check_descendingly_alternative(aalt_gf2).holds
    assert check_descendingly_flexible(aalt_gf2).kind == "fails"
