import numpy as np
import pytest

from schauder import InputError, SeminormSpec, ValueSpace, axpy, coordinate_functional


def test_vector_coercion_and_zero():
    vs = ValueSpace(3)
    v = vs.vector([1, 2, 3])
    assert v.dtype == np.float64
    assert v.shape == (3,)
    assert np.array_equal(vs.zero(), np.zeros(3))


def test_real_space_rejects_complex_components():
    vs = ValueSpace(2)
    with pytest.raises(InputError):
        vs.vector([1.0 + 2.0j, 0.0])


def test_complex_space_accepts_complex():
    vs = ValueSpace(2, field="complex")
    assert vs.vector([1j, 1.0]).dtype == np.complex128


def test_invalid_construction():
    with pytest.raises(InputError):
        ValueSpace(0)
    with pytest.raises(InputError):
        ValueSpace(2, field="quaternion")
    with pytest.raises(InputError):
        SeminormSpec("lp")
    with pytest.raises(InputError):
        ValueSpace(2, seminorms=(SeminormSpec("weighted-sup", (1.0,)),))


def test_default_space_is_single_sup():
    vs = ValueSpace(2)
    assert vs.seminorm_labels() == ["p0_sup"]
    assert vs.seminorm(0, vs.vector([-3.0, 2.0])) == 3.0


def test_weighted_sup_value():
    vs = ValueSpace(2, seminorms=(SeminormSpec("weighted-sup", (2.0, 1.0)),))
    assert vs.seminorm(0, vs.vector([1.0, 1.0])) == 2.0
    assert vs.seminorm(0, vs.vector([0.5, 3.0])) == 3.0


def test_euclidean_value():
    vs = ValueSpace(2, seminorms=(SeminormSpec("euclidean"),))
    got = vs.seminorm(0, vs.vector([1.0, 1.0]))
    assert abs(got - np.sqrt(2.0)) <= 1e-15


def test_coordinate_subset_mask():
    # mask length must equal the dimension; only unmasked entries count
    vs = ValueSpace(3, seminorms=(SeminormSpec("coordinate-subset-sup", (1.0, 0.0, 1.0)), SeminormSpec("sup")))
    assert vs.seminorm(0, vs.vector([1.0, 9.0, 2.0])) == 2.0
    assert vs.seminorm(1, vs.vector([1.0, 9.0, 2.0])) == 9.0


def test_family_must_separate_points():
    # a mask that never sees the second coordinate cannot tell e_1 from 0
    with pytest.raises(InputError):
        ValueSpace(2, seminorms=(SeminormSpec("coordinate-subset-sup", (1.0, 0.0)),))


def test_seminorm_values_and_table_agree():
    vs = ValueSpace(
        2,
        seminorms=(SeminormSpec("sup"), SeminormSpec("weighted-sup", (2.0, 1.0)), SeminormSpec("euclidean")),
    )
    rows = np.array([[1.0, 1.0], [0.0, -2.0], [3.0, 4.0]])
    table = vs.seminorm_table(rows)
    assert table.shape == (3, 3)
    for i in range(rows.shape[0]):
        assert np.array_equal(table[i], vs.seminorm_values(rows[i]))


def test_homogeneity_exact_for_dyadic_scalars():
    vs = ValueSpace(3, seminorms=(SeminormSpec("sup"), SeminormSpec("euclidean")))
    rng = np.random.default_rng(7)
    for _ in range(20):
        v = vs.vector(rng.standard_normal(3))
        for a in (0.5, 2.0, 4.0, 0.125):
            # scaling by a power of two is exact in binary arithmetic
            for k in range(len(vs.seminorm_labels())):
                assert vs.seminorm(k, a * v) == a * vs.seminorm(k, v)


def test_homogeneity_general_scalar_close():
    vs = ValueSpace(3, seminorms=(SeminormSpec("euclidean"),))
    rng = np.random.default_rng(11)
    for _ in range(20):
        v = vs.vector(rng.standard_normal(3))
        a = float(rng.uniform(0.1, 3.0))
        lhs = vs.seminorm(0, a * v)
        rhs = abs(a) * vs.seminorm(0, v)
        assert abs(lhs - rhs) <= 4 * np.spacing(rhs)


def test_subadditivity_property():
    vs = ValueSpace(
        4,
        seminorms=(SeminormSpec("sup"), SeminormSpec("weighted-sup", (1.0, 2.0, 0.5, 1.5)), SeminormSpec("euclidean")),
    )
    rng = np.random.default_rng(13)
    for _ in range(50):
        x = vs.vector(rng.standard_normal(4))
        y = vs.vector(rng.standard_normal(4))
        for k in range(3):
            assert vs.seminorm(k, x + y) <= vs.seminorm(k, x) + vs.seminorm(k, y) + 1e-12


def test_axpy_and_coordinate_functional():
    vs = ValueSpace(3)
    x = vs.vector([1.0, 2.0, 3.0])
    y = vs.vector([0.5, 0.25, -1.0])
    assert np.array_equal(axpy(2.0, x, y), 2.0 * x + y)
    assert coordinate_functional(1, x) == 2.0
    with pytest.raises(InputError):
        coordinate_functional(5, x)
