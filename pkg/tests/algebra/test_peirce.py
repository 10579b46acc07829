"""Tests for Peirce views, bimodule diagnostics and block-form maps."""

import pytest

from src.algebra.peirce import (
    bimodule_annihilator, block_center, block_closure_witness, center_projection, corner_algebra,
    extract_block_data, faithful_criterion, find_standardizing_maps, g_defect, is_faithful,
    one_point_derivation_shape, pairing_image, peirce_decompose, reassemble, source_complement,
    source_cycle_space_check, standard_parts_from_block_maps, verify_der_block_conditions,
    verify_lie_block_conditions, vertex_sum, zero_pairing_criterion
)
from src.algebra.spaces import (
    center, central_annihilating_maps, derivation_space, grading_derivation, is_central_annihilating,
    is_derivation, lie_derivation_space
)
from src.core.errors import PeirceError
from src.models.linear_map import LinearMap
from src.models.peirce import BlockMapData
from src.models.report import NOT_APPLICABLE


def _view(dx, vertex='1'):
    return peirce_decompose(dx.algebra, source_complement(dx.algebra, vertex))


def test_star_tree_blocks(star_dual):
    """Test the blocks at e2 + e3."""
    view = _view(star_dual)
    
    assert view.dims == {'A': 5, 'M': 2, 'N': 2, 'B': 2}
    assert view.support == ('2', '3')
    assert view.basis_labels('M') == ['α', 'β*.α']
    assert view.basis_labels('N') == ['α*', 'α*.β']
    assert view.basis_labels('B') == ['e1', 'α*.α']
    assert block_closure_witness(view) is None


def test_triangle_blocks(triangle_dual):
    """Test the blocks of the triangle at the complement of its source."""
    view = _view(triangle_dual)
    
    assert view.dims == {'A': 5, 'M': 5, 'N': 5, 'B': 6}
    assert block_closure_witness(view) is None


def test_non_vertex_idempotent(star_dual):
    """Test a view at an idempotent that is not a vertex sum."""
    alg = star_dual.algebra
    e = alg.element({'e1': 1, 'α*': 1})
    view = peirce_decompose(alg, e)
    
    assert not view.is_vertex_sum
    assert sum(view.dims.values()) == alg.dim
    assert block_closure_witness(view) is None
    with pytest.raises(PeirceError, match="sum of vertex idempotents"):
        corner_algebra(view, 'A')


def test_bad_idempotents(star_dual):
    """Test rejection of non-idempotents and unknown vertices."""
    alg = star_dual.algebra
    with pytest.raises(PeirceError, match="not an idempotent"):
        peirce_decompose(alg, alg.basis_element('e1').scale(2))
    with pytest.raises(PeirceError, match="Unknown vertex"):
        vertex_sum(alg, ['9'])


def test_projections_reassemble_elements(triangle_dual):
    """Test that the four projections add up to the identity."""
    view = _view(triangle_dual)
    total = LinearMap.zero(triangle_dual.algebra.dim)
    for block in ('A', 'M', 'N', 'B'):
        total = total + view.projection(block)
    
    assert total == LinearMap.identity(triangle_dual.algebra.dim)


def test_pairings(star_dual, star_onepoint, triangle_dual):
    """Test MN = 0 always, NM ≠ 0 for dual extensions and = 0 for one-point ones."""
    for dx in (star_dual, triangle_dual):
        view = _view(dx)
        assert pairing_image(view, 'MN').is_zero()
        assert not pairing_image(view, 'NM').is_zero()
    one_point = _view(star_onepoint)
    assert pairing_image(one_point, 'MN').is_zero()
    assert pairing_image(one_point, 'NM').is_zero()
    with pytest.raises(PeirceError, match="'MN' or 'NM'"):
        pairing_image(one_point, 'MM')


def test_star_tree_annihilators(star_dual):
    """Test the annihilators of M and N at e2 + e3."""
    alg = star_dual.algebra
    view = _view(star_dual)
    
    assert bimodule_annihilator(view, 'M', 'left').contains(alg.basis_element('β').support())
    assert bimodule_annihilator(view, 'M', 'right').contains(alg.basis_element('α*.α').support())
    assert bimodule_annihilator(view, 'N', 'left').contains(alg.basis_element('α*.α').support())
    assert bimodule_annihilator(view, 'N', 'right').contains(alg.basis_element('β*.β').support())
    assert not is_faithful(view, 'M', 'left')
    with pytest.raises(PeirceError, match="Unknown annihilator"):
        bimodule_annihilator(view, 'A', 'left')


def test_triangle_annihilators(triangle_dual):
    """Test that M is faithful on the left but not on the right."""
    alg = triangle_dual.algebra
    view = _view(triangle_dual)
    
    assert is_faithful(view, 'M', 'left')
    right = bimodule_annihilator(view, 'M', 'right')
    assert right.contains(alg.basis_element('α*.β*.β.α').support())


def test_block_centers_and_projection(star_dual):
    """Test Z(A), Z(B) and the projections of Z(X)."""
    alg = star_dual.algebra
    view = _view(star_dual)
    
    z_b = block_center(view, 'B')
    assert z_b.dim == 2
    assert center_projection(view, 'B').contains(alg.basis_element('α*.α').support())
    with pytest.raises(PeirceError, match="'A' and 'B'"):
        block_center(view, 'M')


def test_corner_algebra(star_dual):
    """Test eXe as an algebra of its own."""
    view = _view(star_dual)
    corner = corner_algebra(view, 'A')
    
    assert corner.dim == 5
    assert corner.labels == ['e2', 'e3', 'β', 'β*', 'β*.β']
    assert corner_algebra(view, 'B').dim == 2


def test_lie_derivations_fit_the_block_form(star_dual, triangle_dual):
    """Test block extraction and reassembly for every Lie derivation."""
    for dx in (star_dual, triangle_dual):
        view = _view(dx)
        for theta in lie_derivation_space(dx.algebra).basis:
            data = extract_block_data(view, theta)
            assert reassemble(view, data) == theta
            assert verify_lie_block_conditions(view, data).passed
            assert g_defect(view, data).passed


def test_derivations_satisfy_derivation_block_conditions(triangle_dual):
    """Test the block conditions of derivations."""
    view = _view(triangle_dual)
    for theta in derivation_space(triangle_dual.algebra).basis:
        data = extract_block_data(view, theta)
        report = verify_der_block_conditions(view, data)
        assert report.passed, report.failures()


def test_map_outside_the_block_form(star_dual):
    """Test that a map sending e1 into M is rejected by the block form."""
    alg = star_dual.algebra
    view = _view(star_dual)
    theta = LinearMap.from_function(
        alg.dim, lambda j: {alg.index_of('α'): 1} if j == alg.index_of('e1') else {}
    )
    
    assert extract_block_data(view, LinearMap.identity(alg.dim)).m0.is_zero()
    with pytest.raises(PeirceError, match="block form at e1"):
        extract_block_data(view, theta)


def test_asymmetric_delta1_fails_g_symmetry(star_dual):
    """Test the G map on fabricated block data with δ1(e2) = β."""
    alg = star_dual.algebra
    view = _view(star_dual)
    zero = LinearMap.zero(alg.dim)
    delta1 = LinearMap.from_function(
        alg.dim, lambda j: {alg.index_of('β'): 1} if j == alg.index_of('e2') else {}
    )
    data = BlockMapData(delta1, zero, zero, zero, zero, zero, alg.zero(), alg.zero())
    
    report = g_defect(view, data)
    assert not report.result('g-symmetric').passed
    assert report.result('g-symmetric').witnesses


def test_standardizing_maps(star_dual, triangle_dual):
    """Test that standardizing maps exist and give a standard split."""
    for dx in (star_dual, triangle_dual):
        alg = dx.algebra
        z = center(alg)
        view = _view(dx)
        for theta in lie_derivation_space(alg).basis:
            data = extract_block_data(view, theta)
            maps = find_standardizing_maps(view, data)
            assert maps is not None
            d_part, h = standard_parts_from_block_maps(view, data, maps)
            assert is_derivation(alg, d_part)
            assert is_central_annihilating(alg, h, z)


def test_source_cycle_space(star_dual):
    """Test that Lie derivations send square-zero cycles at sources to the center."""
    for theta in lie_derivation_space(star_dual.algebra).basis:
        for vertex in ('1', '3'):
            assert source_cycle_space_check(star_dual, vertex, theta).passed
    with pytest.raises(PeirceError, match="not a source"):
        source_cycle_space_check(star_dual, '2', grading_derivation(star_dual.algebra))


def test_one_point_derivation_shape(a2_onepoint, star_onepoint):
    """Test μ4 = δ4 = μ1 = 0 for derivations of one-point extensions."""
    for dx in (a2_onepoint, star_onepoint):
        view = _view(dx)
        assert one_point_derivation_shape(view, derivation_space(dx.algebra)).passed


def test_zero_pairing_criterion(a2_onepoint, star_dual):
    """Test the criterion on a one-point extension and its inapplicability to a dual one."""
    alg = a2_onepoint.algebra
    view = _view(a2_onepoint)
    report = zero_pairing_criterion(
        view, lie_derivation_space(alg), derivation_space(alg), central_annihilating_maps(alg)
    )
    assert report.passed
    assert report.result('lie-derivations-standard').passed
    
    dual = star_dual.algebra
    report = zero_pairing_criterion(
        _view(star_dual), lie_derivation_space(dual), derivation_space(dual), central_annihilating_maps(dual)
    )
    assert report.verdict == NOT_APPLICABLE
    assert 'pairings-zero' in report.reason


def test_faithful_criterion_not_applicable_on_star(star_dual):
    """Test that an unfaithful M makes the criterion inapplicable."""
    alg = star_dual.algebra
    report = faithful_criterion(
        _view(star_dual), lie_derivation_space(alg), derivation_space(alg), central_annihilating_maps(alg)
    )
    
    assert report.verdict == NOT_APPLICABLE
    assert 'm-faithful-left' in report.reason
