import numpy as np
import pytest

from tvo import PreconditionError, StructureError, Triangulation
from tvo.triangulation import inverse_perm, pachner_14, pachner_23

from helpers import random_pachner_sequence, two_tet_sphere


def counts(tri):
    return (tri.num_tets, tri.num_vertices, tri.num_edges, tri.num_faces)


def test_boundary_4_simplex_counts(s3_triangulation):
    tri = s3_triangulation
    assert counts(tri) == (5, 5, 10, 10)
    assert tri.euler_characteristic == 0
    assert tri.is_closed
    tri.validate_closed_manifold()


def test_boundary_4_simplex_orientable(s3_triangulation):
    signs = s3_triangulation.orientation
    assert signs is not None
    assert set(signs) <= {-1, 1}


def test_two_tet_sphere_counts():
    tri = two_tet_sphere()
    assert counts(tri) == (2, 4, 6, 4)
    assert tri.euler_characteristic == 0
    assert tri.orientation is not None


def test_involution_validation():
    ident = (0, 1, 2, 3)
    with pytest.raises(StructureError):
        # one-sided gluing: reverse entry missing
        Triangulation(2, {(0, 0): (1, ident)})
    swapped = (1, 0, 2, 3)
    with pytest.raises(StructureError):
        # inconsistent reverse permutation
        Triangulation(2, {(0, 0): (1, ident), (1, 0): (0, swapped)})


def test_face_glued_to_itself_rejected():
    with pytest.raises(StructureError):
        Triangulation(1, {(0, 0): (0, (0, 1, 2, 3))})


def test_index_validation():
    with pytest.raises(StructureError):
        Triangulation(1, {(0, 5): (0, (0, 1, 2, 3))})
    with pytest.raises(StructureError):
        Triangulation(1, {(2, 0): (0, (0, 1, 2, 3))})
    with pytest.raises(StructureError):
        Triangulation(2, {(0, 0): (1, (0, 0, 2, 3))})


def test_inverse_perm():
    assert inverse_perm((2, 0, 1, 3)) == (1, 2, 0, 3)
    assert inverse_perm((0, 1, 2, 3)) == (0, 1, 2, 3)


def test_open_complex_rejected_for_manifold_checks():
    ident = (0, 1, 2, 3)
    tri = Triangulation(2, {(0, 0): (1, ident), (1, 0): (0, ident)})
    assert not tri.is_closed
    with pytest.raises(StructureError):
        tri.validate_closed_manifold()


def test_pachner_14_counts(s3_triangulation):
    out = pachner_14(s3_triangulation, 0)
    assert counts(out) == (8, 6, 14, 16)
    assert out.euler_characteristic == 0
    out.validate_closed_manifold()
    assert out.orientation is not None


def test_pachner_23_counts_every_face(s3_triangulation):
    for (t, f) in s3_triangulation.face_classes:
        out = pachner_23(s3_triangulation, t, f)
        assert out.num_tets == 6
        assert out.num_vertices == 5
        assert out.num_edges == s3_triangulation.num_edges + 1
        assert out.euler_characteristic == 0
        out.validate_closed_manifold()
        assert out.orientation is not None


def test_pachner_14_on_self_adjacent_tet():
    # a 2-3 move on the two-tet sphere produces tets glued to themselves
    # along two different faces; a 1-4 there must still give a valid complex
    moved = pachner_23(two_tet_sphere(), 0, 0)
    target = next(t for (t, f), (t2, _) in moved.gluings.items() if t == t2)
    out = pachner_14(moved, target)
    assert out.num_tets == moved.num_tets + 3
    assert out.euler_characteristic == 0
    out.validate_closed_manifold()


def test_pachner_14_on_self_glued_tet():
    # the two-tet sphere's tets are glued to each other on all faces; do a
    # 1-4 inside and check the result stays a valid closed manifold
    tri = two_tet_sphere()
    out = pachner_14(tri, 0)
    assert counts(out)[0] == 5
    assert out.euler_characteristic == 0
    out.validate_closed_manifold()


def test_pachner_23_needs_distinct_tets():
    # after a 1-4 on a single tetrahedron complex... build a self-adjacent
    # case: two-tet sphere has distinct tets everywhere, so fabricate the
    # error by asking for a face of a tet glued to itself via a 3-tet chain
    tri = two_tet_sphere()
    # all faces join distinct tets here; the error path needs t == t2, so
    # construct it directly from a moved complex
    moved = pachner_23(tri, 0, 0)
    found_self = None
    for (t, f), (t2, _) in moved.gluings.items():
        if t == t2:
            found_self = (t, f)
            break
    if found_self is None:
        pytest.skip("no self-adjacent face in this complex")
    with pytest.raises(PreconditionError):
        pachner_23(moved, *found_self)


def test_pachner_23_invalid_face(s3_triangulation):
    with pytest.raises(StructureError):
        pachner_23(s3_triangulation, 17, 0)


def test_pachner_14_invalid_tet(s3_triangulation):
    with pytest.raises(StructureError):
        pachner_14(s3_triangulation, 17)


def test_random_move_sequences_stay_valid(s3_triangulation):
    rng = np.random.default_rng(11)
    tri, applied = random_pachner_sequence(s3_triangulation, 20, rng, max_new_vertices=3)
    assert len(applied) == 20
    tri.validate_closed_manifold()
    assert tri.euler_characteristic == 0
    assert tri.orientation is not None
    kinds = {kind for kind, _ in applied}
    assert "2-3" in kinds
