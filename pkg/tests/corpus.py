"""Shared corpus of groupoids, algebras, actions, mutants and graphs for the tests."""

from grpd.exactlin import Field, Matrix, Subspace
from grpd.algebra import StructureAlgebra
from grpd import groupoid as gpd
from grpd.paction import PartialAction
from grpd.skewring import groupoid_ring_action
from grpd import leavitt as lv

Q = Field(0)


def componentwise(field, n):
    """The split algebra field^n with coordinatewise multiplication."""
    table = [[field.zero_vec(n) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        table[i][i] = field.unit_vec(n, i)
    return StructureAlgebra(
        field, n, table, unit=[field.one] * n, labels=[f"u{i}" for i in range(n)]
    )


def scalar_algebra(field):
    return StructureAlgebra(field, 1, [[[field.one]]], unit=[field.one], labels=["1"])


def group_algebra(field, n):
    """The group algebra of Z/n over the field, basis indexed by exponents."""
    table = [[field.unit_vec(n, (i + j) % n) for j in range(n)] for i in range(n)]
    unit = field.unit_vec(n, 0)
    return StructureAlgebra(field, n, table, unit=unit, labels=[f"d{i}" for i in range(n)])


def dual_numbers(field):
    """field[x]/(x^2), radical spanned by x."""
    z, o = field.zero, field.one
    return StructureAlgebra(
        field, 2, [[[o, z], [z, o]], [[z, o], [z, z]]], unit=[o, z], labels=["1", "x"]
    )


def truncated_poly3(field):
    """field[x]/(x^3), radical spanned by x and x^2."""
    z = field.zero
    table = [[field.zero_vec(3) for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(3):
            if i + j < 3:
                table[i][j] = field.unit_vec(3, i + j)
    return StructureAlgebra(field, 3, table, unit=field.unit_vec(3, 0), labels=["1", "x", "x2"])


def upper_triangular2(field):
    """Upper triangular 2x2 matrices, basis E11, E12, E22."""
    z = field.zero
    names = [(0, 0), (0, 1), (1, 1)]
    idx = {p: i for i, p in enumerate(names)}
    table = [[field.zero_vec(3) for _ in range(3)] for _ in range(3)]
    for a, (i, j) in enumerate(names):
        for b, (k, l) in enumerate(names):
            if j == k:
                table[a][b] = field.unit_vec(3, idx[(i, l)])
    unit = field.zero_vec(3)
    unit[idx[(0, 0)]] = field.one
    unit[idx[(1, 1)]] = field.one
    return StructureAlgebra(field, 3, table, unit=unit, labels=["E11", "E12", "E22"])


# -- partial actions --------------------------------------------------------------


def swap_action(field=Q):
    """Global Z/2 action swapping the coordinates of field^2."""
    g = gpd.cyclic_group(2)
    amb = componentwise(field, 2)
    full = Subspace.full(field, 2)
    swap = Matrix(field, [[field.zero, field.one], [field.one, field.zero]])
    return PartialAction.from_ambient_maps(
        g, amb, {"*": full}, {"g0": full, "g1": full},
        {"g0": Matrix.identity(field, 2), "g1": swap},
    )


def restricted_swap_action(field=Q):
    """Partial Z/2 action on the field itself: the non-identity domain is zero."""
    g = gpd.cyclic_group(2)
    amb = componentwise(field, 1)
    full = Subspace.full(field, 1)
    zero = Subspace.zero(field, 1)
    return PartialAction.from_ambient_maps(
        g, amb, {"*": full}, {"g0": full, "g1": zero},
        {"g0": Matrix.identity(field, 1), "g1": Matrix.zeros(field, 1, 1)},
    )


def corner_action(field=Q):
    """Partial Z/2 action on field^2 fixing the first coordinate ideal."""
    g = gpd.cyclic_group(2)
    amb = componentwise(field, 2)
    full = Subspace.full(field, 2)
    corner = Subspace.from_vectors(field, 2, [[field.one, field.zero]])
    return PartialAction.from_ambient_maps(
        g, amb, {"*": full}, {"g0": full, "g1": corner},
        {"g0": Matrix.identity(field, 2), "g1": Matrix.identity(field, 2)},
    )


def shift_restriction_action(field=Q):
    """Z/4 cyclic shift of field^4 restricted to the first three coordinates."""
    g = gpd.cyclic_group(4)
    amb = componentwise(field, 3)
    full = Subspace.full(field, 3)
    e = [field.unit_vec(3, i) for i in range(3)]

    def span(*vs):
        return Subspace.from_vectors(field, 3, list(vs))

    domains = {"g0": full, "g1": span(e[1], e[2]), "g2": span(e[0], e[2]), "g3": span(e[0], e[1])}

    def shift(k):
        def f(v):
            out = field.zero_vec(3)
            for i, c in enumerate(v):
                j = (i + k) % 4
                if j < 3:
                    out[j] = c
                elif c:
                    raise ValueError("shift image left the restricted window")
            return out

        return f

    maps = {"g0": Matrix.identity(field, 3), "g1": shift(1), "g2": shift(2), "g3": shift(3)}
    return PartialAction.from_ambient_maps(g, amb, {"*": full}, domains, maps)


def pair_ring_action(n, field=Q):
    return groupoid_ring_action(gpd.pair_groupoid(n), scalar_algebra(field))


def octonion_trivial_action():
    """Trivial Z/2 action on the rational octonions (non-associative ambient)."""
    from grpd.algebra import cayley_dickson_chain

    g = gpd.cyclic_group(2)
    amb = cayley_dickson_chain(Q, 3)
    full = Subspace.full(Q, 8)
    ident = Matrix.identity(Q, 8)
    return PartialAction.from_ambient_maps(
        g, amb, {"*": full}, {"g0": full, "g1": full}, {"g0": ident, "g1": ident}
    )


def guard_action_f2():
    """Trivial Z/2 action on F_2: both Maschke premises fail."""
    F2 = Field(2)
    g = gpd.cyclic_group(2)
    amb = componentwise(F2, 1)
    full = Subspace.full(F2, 1)
    ident = Matrix.identity(F2, 1)
    return PartialAction.from_ambient_maps(
        g, amb, {"*": full}, {"g0": full, "g1": full}, {"g0": ident, "g1": ident}
    )


def unital_corpus():
    """Valid unital actions used across the property tests."""
    return [
        ("swap", swap_action()),
        ("restricted_swap", restricted_swap_action()),
        ("corner", corner_action()),
        ("shift_restriction", shift_restriction_action()),
        ("pair2_ring", pair_ring_action(2)),
        ("swap_f5", swap_action(Field(5))),
    ]


# -- single-axiom mutants ------------------------------------------------------------


def mutant_p1():
    """Identity domain shrunk below the component: exactly a (P1) failure.

    Also the finite-type negative: every domain is the first-coordinate
    ideal while the component is the whole plane.
    """
    field = Q
    g = gpd.cyclic_group(2)
    amb = componentwise(field, 2)
    full = Subspace.full(field, 2)
    corner = Subspace.from_vectors(field, 2, [[field.one, field.zero]])
    return PartialAction.from_ambient_maps(
        g, amb, {"*": full}, {"g0": corner, "g1": corner},
        {"g0": Matrix.identity(field, 2), "g1": Matrix.identity(field, 2)},
    )


def mutant_p2():
    """A zeroed composite domain in the pair groupoid on three objects: (P2) only."""
    field = Q
    g = gpd.pair_groupoid(3)
    base = groupoid_ring_action(g, scalar_algebra(field))
    domains = dict(base.domains)
    maps = dict(base.maps)
    zero = Subspace.zero(field, base.ambient.dim)
    for m in ("(1,3)", "(3,1)"):
        domains[m] = zero
        maps[m] = Matrix.zeros(field, 0, 0)
    return PartialAction(g, base.ambient, base.object_components, domains, maps)


def mutant_p3():
    """The cross maps of the pair groupoid twisted by a coordinate swap: (P3) only."""
    field = Q
    g = gpd.pair_groupoid(2)
    amb = componentwise(field, 4)  # two objects, each carrying field^2
    e = [field.unit_vec(4, i) for i in range(4)]

    def span(*vs):
        return Subspace.from_vectors(field, 4, list(vs))

    comp = {"1": span(e[0], e[1]), "2": span(e[2], e[3])}
    domains = {"(1,1)": comp["1"], "(2,2)": comp["2"], "(1,2)": comp["1"], "(2,1)": comp["2"]}
    ident2 = Matrix.identity(field, 2)
    swap2 = Matrix(field, [[field.zero, field.one], [field.one, field.zero]])
    maps = {"(1,1)": ident2, "(2,2)": ident2, "(2,1)": ident2, "(1,2)": swap2}
    return PartialAction(g, amb, comp, domains, maps)


def mutant_p4():
    """Both object components equal: the decomposition overlaps, (P4) only."""
    field = Q
    g = gpd.pair_groupoid(2)
    amb = componentwise(field, 2)
    corner = Subspace.from_vectors(field, 2, [[field.one, field.zero]])
    comp = {"1": corner, "2": corner}
    domains = {m: corner for m in g.morphisms}
    maps = {m: Matrix.identity(field, 1) for m in g.morphisms}
    return PartialAction(g, amb, comp, domains, maps)


def mutant_ideal():
    """Non-identity domain replaced by the diagonal subalgebra: ideal-ness only."""
    field = Q
    g = gpd.cyclic_group(2)
    amb = componentwise(field, 2)
    full = Subspace.full(field, 2)
    diag = Subspace.from_vectors(field, 2, [[field.one, field.one]])
    return PartialAction.from_ambient_maps(
        g, amb, {"*": full}, {"g0": full, "g1": diag},
        {"g0": Matrix.identity(field, 2), "g1": Matrix.identity(field, 2)},
    )


def mutant_mult():
    """A linear involution that is not a ring map: multiplicativity only."""
    field = Q
    g = gpd.cyclic_group(2)
    amb = componentwise(field, 2)
    full = Subspace.full(field, 2)
    o, z = field.one, field.zero
    crooked = Matrix(field, [[o, o], [z, -o]])  # squares to the identity
    return PartialAction.from_ambient_maps(
        g, amb, {"*": full}, {"g0": full, "g1": full},
        {"g0": Matrix.identity(field, 2), "g1": crooked},
    )


def mutants():
    return {
        "P1": mutant_p1(),
        "P2": mutant_p2(),
        "P3": mutant_p3(),
        "P4": mutant_p4(),
        "ideal": mutant_ideal(),
        "multiplicative": mutant_mult(),
    }


# -- graphs ---------------------------------------------------------------------------


def corpus_graphs():
    return {
        "single": lv.DirectedGraph(["v"], []),
        "A2": lv.DirectedGraph(["v", "w"], [("f", "v", "w")]),
        "A3": lv.DirectedGraph(
            ["v1", "v2", "v3"], [("e1", "v1", "v2"), ("e2", "v2", "v3")]
        ),
        "parallel": lv.DirectedGraph(["v", "w"], [("f1", "v", "w"), ("f2", "v", "w")]),
        "tree": lv.DirectedGraph(
            ["u", "c1", "c2", "l1", "l2", "l3", "l4"],
            [
                ("e1", "u", "c1"),
                ("e2", "u", "c2"),
                ("a1", "c1", "l1"),
                ("a2", "c1", "l2"),
                ("a3", "c2", "l3"),
                ("a4", "c2", "l4"),
            ],
        ),
        "disjoint": lv.DirectedGraph(["v", "w", "x"], [("f", "v", "w")]),
    }


def cyclic_graphs():
    return {
        "loop": lv.DirectedGraph(["v"], [("f", "v", "v")]),
        "two_cycle": lv.DirectedGraph(["a", "b"], [("x", "a", "b"), ("y", "b", "a")]),
    }
