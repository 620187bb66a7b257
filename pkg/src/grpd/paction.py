"""Partial actions of finite groupoids on decomposed algebras.

A partial action assigns to every object e a component ideal R_e with
R = (+)_e R_e, to every morphism g a domain ideal R_g inside R_{c(g)}, and
to every morphism a linear ring isomorphism alpha_g from R_{g^-1} onto R_g.
This module validates the axioms, decides unitality / globality / finite
type, computes trace maps and fixed rings, and constructs and verifies
globalizations inside a function-space envelope.
"""

from dataclasses import dataclass

from .errors import DimensionError, PreconditionError, SchemaError, UnsupportedError, Violation
from .exactlin import Matrix, Subspace, kernel, solve


class PartialAction:
    """Partial groupoid action on a decomposed ambient algebra.

    Subspaces are stored with RREF bases; each alpha_g is a matrix sending
    RREF coordinates of R_{g^-1} to RREF coordinates of R_g.
    """

    def __init__(self, groupoid, ambient, object_components, domains, maps):
        self.groupoid = groupoid
        self.ambient = ambient
        self.object_components = dict(object_components)
        self.domains = dict(domains)
        self.maps = dict(maps)
        n = ambient.dim
        for e in groupoid.objects:
            if e not in self.object_components:
                raise KeyError(f"no component subspace for object {e!r}")
            if self.object_components[e].ambient_dim != n:
                raise DimensionError(f"component at {e!r} has wrong ambient dimension")
        for g in groupoid.morphisms:
            if g not in self.domains:
                raise KeyError(f"no domain subspace for morphism {g!r}")
            if self.domains[g].ambient_dim != n:
                raise DimensionError(f"domain at {g!r} has wrong ambient dimension")
        for g in groupoid.morphisms:
            m = self.maps.get(g)
            need = (self.domains[g].dim, self.domains[self.inv(g)].dim)
            if m is None:
                raise KeyError(f"no map for morphism {g!r}")
            if (m.nrows, m.ncols) != need:
                raise DimensionError(
                    f"map at {g!r} has shape {(m.nrows, m.ncols)}, expected {need}"
                )
        self._domain_units = {}
        self._restrictions = {}

    @classmethod
    def from_ambient_maps(cls, groupoid, ambient, object_components, domains, ambient_maps):
        """Build from alpha_g given as ambient matrices or vector functions."""
        maps = {}
        for g in groupoid.morphisms:
            src = domains[groupoid.inverse[g]]
            dst = domains[g]
            f = ambient_maps[g]
            cols = []
            for b in src.basis:
                img = f.apply(b) if isinstance(f, Matrix) else f(b)
                cols.append(dst.coords(img))
            maps[g] = Matrix.from_columns(ambient.field, cols, dst.dim)
        return cls(groupoid, ambient, object_components, domains, maps)

    # -- small helpers -------------------------------------------------------

    def inv(self, g):
        return self.groupoid.inverse[g]

    def apply_alpha(self, g, v):
        """alpha_g applied to an ambient vector lying in R_{g^-1}."""
        src = self.domains[self.inv(g)]
        dst = self.domains[g]
        return dst.expand(self.maps[g].apply(src.coords(v)))

    def alpha_ambient_matrix(self, g):
        """Ambient matrix extending alpha_g by RREF-coordinate extraction.

        Agrees with alpha_g on R_{g^-1}; meaningless off it, so compose only
        with maps whose image lies in the domain.
        """
        src = self.domains[self.inv(g)]
        dst = self.domains[g]
        n = self.ambient.dim
        field = self.ambient.field
        if src.dim == 0 or dst.dim == 0:
            return Matrix.zeros(field, n, n)
        extract = Matrix(
            field,
            [[field.one if c == p else field.zero for c in range(n)] for p in src.pivots],
        )
        expand = Matrix.from_columns(field, dst.basis, n)
        return expand.mul(self.maps[g].mul(extract))

    def domain_unit(self, g):
        """Unit of the subalgebra R_g as an ambient vector; None if absent or R_g = 0."""
        if g in self._domain_units:
            u = self._domain_units[g]
            return list(u) if u is not None else None
        space = self.domains[g]
        if space.dim == 0:
            self._domain_units[g] = None
            return None
        sub, _ = self.ambient.subalgebra(space)
        u = sub.find_unit()
        out = space.expand(u) if u is not None else None
        self._domain_units[g] = out
        return list(out) if out is not None else None

    def restriction(self, g):
        """The domain R_g as an algebra in its own right."""
        if g not in self._restrictions:
            self._restrictions[g] = self.ambient.subalgebra(self.domains[g])
        return self._restrictions[g]

    def __repr__(self):
        return (
            f"PartialAction({self.groupoid!r} on dim-{self.ambient.dim} algebra)"
        )


# -- validation ---------------------------------------------------------------


def validate_action(pa):
    """Check (P1)-(P4), ideal-ness, and the ring-isomorphism conditions.

    Returns a violation list; checks are guarded so that a single broken
    axiom does not cascade into unrelated violation classes.
    """
    out = []
    g0 = pa.groupoid
    amb = pa.ambient
    field = amb.field
    n = amb.dim

    # (P4) direct sum decomposition of the ambient algebra
    total = Subspace.zero(field, n)
    dims = 0
    for e in g0.objects:
        comp = pa.object_components[e]
        total = total.sum(comp)
        dims += comp.dim
    if total.dim != n:
        out.append(Violation("P4", (), f"components span dimension {total.dim} of {n}"))
    elif dims != n:
        out.append(Violation("P4", (), "components overlap: dimensions add beyond ambient"))

    # ideals: R_e ideal of R; R_g inside R_{c(g)} and an ideal of it
    for e in g0.objects:
        comp = pa.object_components[e]
        if not _is_ideal_in(amb, comp, Subspace.full(field, n)):
            out.append(Violation("ideal", (e,), "component is not an ideal of the ambient algebra"))
    for g in g0.morphisms:
        dom = pa.domains[g]
        comp = pa.object_components[g0.cod[g]]
        if not dom <= comp:
            out.append(Violation("ideal", (g,), "domain is not contained in its codomain component"))
            continue
        if not _is_ideal_in(amb, dom, comp):
            out.append(Violation("ideal", (g,), "domain is not an ideal of its codomain component"))

    # alpha_g bijective
    bad_bijection = set()
    for g in g0.morphisms:
        src = pa.domains[pa.inv(g)]
        dst = pa.domains[g]
        m = pa.maps[g]
        if src.dim != dst.dim or (src.dim and len(m.rref_pivots()[1]) != src.dim):
            out.append(Violation("bijective", (g,), "alpha is not a linear bijection"))
            bad_bijection.add(g)

    # alpha_g multiplicative on its domain
    for g in g0.morphisms:
        if g in bad_bijection:
            continue
        src = pa.domains[pa.inv(g)]
        broken = False
        for u in src.basis:
            for v in src.basis:
                w = amb.multiply(u, v)
                if not src.contains(w):
                    continue  # covered by the ideal check
                lhs = pa.apply_alpha(g, w)
                rhs = amb.multiply(pa.apply_alpha(g, u), pa.apply_alpha(g, v))
                if lhs != rhs:
                    out.append(Violation("multiplicative", (g,), "alpha(xy) differs from alpha(x)alpha(y)"))
                    broken = True
                    break
            if broken:
                break

    # (P1) identity morphisms act as the identity on the full component
    for e in g0.objects:
        i = g0.identity[e]
        comp = pa.object_components[e]
        dom = pa.domains[i]
        if dom != comp:
            out.append(Violation("P1", (e,), "identity domain differs from the object component"))
            continue
        m = pa.maps[i]
        if m != Matrix.identity(field, dom.dim):
            out.append(Violation("P1", (e,), "alpha at the identity is not the identity map"))

    # (P2) and (P3) on composable pairs
    for g, h in g0.composable_pairs():
        if h in bad_bijection or g in bad_bijection:
            continue
        gh = g0.compose(g, h)
        if gh in bad_bijection:
            continue
        inter = pa.domains[h].intersect(pa.domains[pa.inv(g)])
        pre = _alpha_preimage(pa, h, inter)
        target = pa.domains[pa.inv(gh)]
        if not pre <= target:
            out.append(Violation("P2", (g, h), "alpha_h^-1(R_h meet R_{g^-1}) leaves R_{(gh)^-1}"))
        dom3 = pre.intersect(target)
        for x in dom3.basis:
            lhs = pa.apply_alpha(g, pa.apply_alpha(h, x))
            rhs = pa.apply_alpha(gh, x)
            if lhs != rhs:
                out.append(Violation("P3", (g, h), "alpha_g alpha_h differs from alpha_{gh}"))
                break
    return out


def _is_ideal_in(amb, inner, outer):
    for v in inner.basis:
        for w in outer.basis:
            if not inner.contains(amb.multiply(v, w)):
                return False
            if not inner.contains(amb.multiply(w, v)):
                return False
    return True


def _alpha_preimage(pa, h, space):
    """alpha_h^-1 of a subspace of R_h, as a subspace of R_{h^-1}."""
    src = pa.domains[pa.inv(h)]
    dst = pa.domains[h]
    vecs = []
    for v in space.basis:
        coords = dst.coords(v)
        back = solve(pa.maps[h], coords)
        if back is None:
            continue
        vecs.append(src.expand(back))
    return Subspace.from_vectors(pa.ambient.field, pa.ambient.dim, vecs)


# -- predicates ----------------------------------------------------------------


def is_unital(pa):
    """True when every nonzero domain carries a multiplicative identity."""
    return all(
        pa.domains[g].dim == 0 or pa.domain_unit(g) is not None
        for g in pa.groupoid.morphisms
    )


def is_global(pa):
    """True when R_g equals the full codomain component for every morphism."""
    return all(
        pa.domains[g] == pa.object_components[pa.groupoid.cod[g]]
        for g in pa.groupoid.morphisms
    )


def support(pa):
    """Morphisms with nonzero domain, in input order."""
    return [g for g in pa.groupoid.morphisms if pa.domains[g].dim > 0]


# -- restriction to the supported part ------------------------------------------


def restrict_to_g_sharp(pa):
    """Drop objects with zero component and all morphisms touching them.

    The resulting action has the same skew ring as the original, under the
    canonical identification of basis vectors.
    """
    g0 = pa.groupoid
    field = pa.ambient.field
    kept_obj = [e for e in g0.objects if pa.object_components[e].dim > 0]
    kept_set = set(kept_obj)
    kept_mor = [g for g in g0.morphisms if g0.dom[g] in kept_set and g0.cod[g] in kept_set]
    mor_set = set(kept_mor)
    sharp = type(g0)(
        objects=kept_obj,
        morphisms=kept_mor,
        dom={m: g0.dom[m] for m in kept_mor},
        cod={m: g0.cod[m] for m in kept_mor},
        inverse={m: g0.inverse[m] for m in kept_mor},
        compose={
            (a, b): c for (a, b), c in g0._compose.items()
            if a in mor_set and b in mor_set and c in mor_set
        },
        identity={e: g0.identity[e] for e in kept_obj},
    )
    big = Subspace.zero(field, pa.ambient.dim)
    for e in kept_obj:
        big = big.sum(pa.object_components[e])
    sub_alg, sub_basis = pa.ambient.subalgebra(big)

    def push_space(space):
        return Subspace.from_vectors(field, sub_alg.dim, [big.coords(v) for v in space.basis])

    components = {e: push_space(pa.object_components[e]) for e in kept_obj}
    domains = {g: push_space(pa.domains[g]) for g in kept_mor}
    maps = {}
    for g in kept_mor:
        src = domains[sharp.inverse[g]]
        dst = domains[g]
        cols = []
        for c in src.basis:
            v = big.expand(c)
            img = pa.apply_alpha(g, v)
            cols.append(dst.coords(big.coords(img)))
        maps[g] = Matrix.from_columns(field, cols, dst.dim)
    unit = sub_alg.find_unit()
    if unit is not None:
        sub_alg.unit = unit
    return PartialAction(sharp, sub_alg, components, domains, maps)


# -- finite type -----------------------------------------------------------------


def _finite_type_at(pa, e, gens):
    """Check the generating condition at object e for a given generator list."""
    g0 = pa.groupoid
    field = pa.ambient.field
    n = pa.ambient.dim
    for g in g0.morphisms_out_of(e):
        target = pa.object_components[g0.cod[g]]
        total = Subspace.zero(field, n)
        for gi in gens:
            total = total.sum(pa.domains[g0.compose(g, gi)])
        if total != target:
            return False
    return True


def is_finite_type(pa):
    """Finite-type test with the full hom-set G(-, e) as generating set.

    The condition is monotone in the generating set, so for a finite
    groupoid this choice is decisive.
    """
    g0 = pa.groupoid
    return all(_finite_type_at(pa, e, g0.morphisms_into(e)) for e in g0.objects)


def finite_type_witnesses(pa):
    """Greedily minimized generator lists per object; None where none works."""
    g0 = pa.groupoid
    out = {}
    for e in g0.objects:
        gens = list(g0.morphisms_into(e))
        if not _finite_type_at(pa, e, gens):
            out[e] = None
            continue
        chosen = []
        for gi in gens:
            if _finite_type_at(pa, e, chosen):
                break
            chosen.append(gi)
        for gi in list(chosen):
            rest = [x for x in chosen if x != gi]
            if _finite_type_at(pa, e, rest):
                chosen = rest
        out[e] = chosen
    return out


# -- trace map and fixed ring ------------------------------------------------------


def trace_map(pa, x):
    """tr(x) = sum over morphisms of alpha_g(x 1_{g^-1}); zero domains drop out."""
    if not is_unital(pa):
        raise UnsupportedError("trace map needs a unital action")
    amb = pa.ambient
    acc = amb.field.zero_vec(amb.dim)
    for g in pa.groupoid.morphisms:
        u = pa.domain_unit(pa.inv(g))
        if u is None:
            continue
        y = amb.multiply(x, u)
        if not pa.domains[pa.inv(g)].contains(y):
            raise PreconditionError("x 1_{g^-1} left the domain; ambient is not associative enough")
        img = pa.apply_alpha(g, y)
        acc = [a + b for a, b in zip(acc, img)]
    return acc


def fixed_ring(pa):
    """Solutions of alpha_g(x 1_{g^-1}) = x 1_g for all morphisms g."""
    if not is_unital(pa):
        raise UnsupportedError("fixed ring needs a unital action")
    amb = pa.ambient
    field = amb.field
    n = amb.dim
    rows = []
    for g in pa.groupoid.morphisms:
        u_src = pa.domain_unit(pa.inv(g))
        u_dst = pa.domain_unit(g)
        lhs = (
            pa.alpha_ambient_matrix(g).mul(amb.right_mult_matrix(u_src))
            if u_src is not None
            else Matrix.zeros(field, n, n)
        )
        rhs = (
            amb.right_mult_matrix(u_dst) if u_dst is not None else Matrix.zeros(field, n, n)
        )
        for r in range(n):
            row = [lhs.rows[r][c] - rhs.rows[r][c] for c in range(n)]
            rows.append(row)
    return kernel(Matrix(field, rows))


def is_invariant_subring(pa, space):
    """G-invariance: alpha_g(A meet R_{g^-1}) stays inside A meet R_g."""
    amb = pa.ambient
    for u in space.basis:
        for v in space.basis:
            if not space.contains(amb.multiply(u, v)):
                raise PreconditionError("subspace is not closed under multiplication")
    for g in pa.groupoid.morphisms:
        inter = space.intersect(pa.domains[pa.inv(g)])
        target = space.intersect(pa.domains[g])
        for x in inter.basis:
            if not target.contains(pa.apply_alpha(g, x)):
                return False
    return True


# -- globalization ------------------------------------------------------------------


@dataclass
class Globalization:
    """A global action together with the embeddings of the original components.

    `action` acts on the enveloping algebra T; `embeddings[e]` maps RREF
    coordinates of the original component R_e to ambient T coordinates.
    """

    partial: PartialAction
    action: PartialAction
    embeddings: dict

    def psi_apply(self, e, v):
        """Embed an ambient vector of the original algebra lying in R_e."""
        coords = self.partial.object_components[e].coords(v)
        return self.embeddings[e].apply(coords)

    def psi_image(self, e, space):
        """Image under psi_e of a subspace of R_e, inside T."""
        t_dim = self.action.ambient.dim
        vecs = [self.psi_apply(e, v) for v in space.basis]
        return Subspace.from_vectors(self.action.ambient.field, t_dim, vecs)


class _Envelope:
    """Function-space coordinates: one ambient-R block per (object, incoming h)."""

    def __init__(self, pa):
        self.pa = pa
        g0 = pa.groupoid
        self.into = {e: g0.morphisms_into(e) for e in g0.objects}
        self.offsets = {}
        off = 0
        n = pa.ambient.dim
        for e in g0.objects:
            for h in self.into[e]:
                self.offsets[(e, h)] = off
                off += n
        self.dim = off
        self.block = n

    def mul(self, x, y):
        n = self.block
        out = self.pa.ambient.field.zero_vec(self.dim)
        for off in range(0, self.dim, n):
            xs = x[off:off + n]
            if not any(xs):
                continue
            ys = y[off:off + n]
            if not any(ys):
                continue
            prod = self.pa.ambient.multiply(xs, ys)
            out[off:off + n] = prod
        return out

    def psi_vec(self, e, r):
        """psi_e(r)(h) = alpha_{h^-1}(r 1_h), laid out in the e block."""
        pa = self.pa
        amb = pa.ambient
        out = amb.field.zero_vec(self.dim)
        for h in self.into[e]:
            u = pa.domain_unit(h)
            if u is None:
                continue
            y = amb.multiply(r, u)
            if not pa.domains[h].contains(y):
                raise PreconditionError("r 1_h left R_h; cannot build the envelope")
            val = pa.apply_alpha(pa.groupoid.inverse[h], y)
            off = self.offsets[(e, h)]
            out[off:off + self.block] = val
        return out

    def beta_apply(self, g, x):
        """(beta_g f)(h) = f(g^-1 h), moving the d(g) block to the c(g) block."""
        g0 = self.pa.groupoid
        e_src = g0.dom[g]
        e_dst = g0.cod[g]
        out = self.pa.ambient.field.zero_vec(self.dim)
        ginv = g0.inverse[g]
        for h in self.into[e_dst]:
            src_h = g0.compose(ginv, h)
            src_off = self.offsets[(e_src, src_h)]
            dst_off = self.offsets[(e_dst, h)]
            out[dst_off:dst_off + self.block] = x[src_off:src_off + self.block]
        return out


def globalize(pa):
    """Enveloping globalization of a unital partial action.

    T_e is generated inside the function space on G(-, e) by the shifted
    embeddings of the components; beta shifts function arguments.  The
    construction's correctness contract is passing `globalization_verify`.
    """
    if not is_unital(pa):
        raise UnsupportedError("globalization needs a unital action")
    env = _Envelope(pa)
    g0 = pa.groupoid
    field = pa.ambient.field

    t_parts = {}
    for e in g0.objects:
        vecs = []
        for h in env.into[e]:
            d = g0.dom[h]
            for r in pa.object_components[d].basis:
                vecs.append(env.beta_apply(h, env.psi_vec(d, r)))
        t_parts[e] = Subspace.from_vectors(field, env.dim, vecs)

    t_basis = []
    part_range = {}
    for e in g0.objects:
        start = len(t_basis)
        t_basis.extend(t_parts[e].basis)
        part_range[e] = (start, len(t_basis))
    t_space = Subspace.from_vectors(field, env.dim, t_basis)
    if t_space.dim != len(t_basis):
        raise UnsupportedError("envelope blocks are not independent")

    t_dim = len(t_basis)
    table = []
    for u in t_basis:
        row = []
        for v in t_basis:
            p = env.mul(u, v)
            try:
                row.append(t_space.coords(p))
            except ValueError:
                raise UnsupportedError("enveloping space is not multiplicatively closed") from None
        table.append(row)
    from .algebra import StructureAlgebra

    t_alg = StructureAlgebra(field, t_dim, table)
    unit = t_alg.find_unit()
    if unit is not None:
        t_alg.unit = unit

    def unit_range_space(e):
        lo, hi = part_range[e]
        return Subspace.from_vectors(
            field, t_dim, [field.unit_vec(t_dim, i) for i in range(lo, hi)]
        )

    components = {e: unit_range_space(e) for e in g0.objects}
    domains = {g: components[g0.cod[g]] for g in g0.morphisms}
    maps = {}
    for g in g0.morphisms:
        src = domains[g0.inverse[g]]
        dst = domains[g]
        cols = []
        for c in src.basis:
            vec_u = t_space.expand(c)
            img = env.beta_apply(g, vec_u)
            cols.append(dst.coords(t_space.coords(img)))
        maps[g] = Matrix.from_columns(field, cols, dst.dim)
    beta = PartialAction(g0, t_alg, components, domains, maps)

    embeddings = {}
    for e in g0.objects:
        comp = pa.object_components[e]
        cols = []
        for r in comp.basis:
            vec_u = env.psi_vec(e, r)
            try:
                cols.append(t_space.coords(vec_u))
            except ValueError:
                raise UnsupportedError("psi image escaped the envelope") from None
        embeddings[e] = Matrix.from_columns(field, cols, t_dim)
    return Globalization(partial=pa, action=beta, embeddings=embeddings)


def globalization_verify(pa, glob):
    """Check the four globalization axioms plus monomorphism conditions."""
    out = []
    g0 = pa.groupoid
    beta = glob.action
    t_alg = beta.ambient
    field = t_alg.field

    if validate_action(beta):
        out.append(Violation("beta-invalid", (), "candidate global action breaks the action axioms"))
    if not is_global(beta):
        out.append(Violation("beta-not-global", (), "candidate action is not global"))

    psi_of_component = {}
    for e in g0.objects:
        comp = pa.object_components[e]
        m = glob.embeddings[e]
        if len(m.rref_pivots()[1]) != comp.dim:
            out.append(Violation("psi-mono", (e,), "psi is not injective"))
        for u in comp.basis:
            for v in comp.basis:
                w = pa.ambient.multiply(u, v)
                if not comp.contains(w):
                    continue
                lhs = glob.psi_apply(e, w)
                rhs = t_alg.multiply(glob.psi_apply(e, u), glob.psi_apply(e, v))
                if lhs != rhs:
                    out.append(Violation("psi-ring", (e,), "psi is not multiplicative"))
                    break
            else:
                continue
            break
        psi_of_component[e] = glob.psi_image(e, comp)

    # (i) psi_e(R_e) is an ideal of T_e
    for e in g0.objects:
        image = psi_of_component[e]
        t_e = beta.object_components[e]
        for t in t_e.basis:
            for x in image.basis:
                if not image.contains(t_alg.multiply(t, x)) or not image.contains(
                    t_alg.multiply(x, t)
                ):
                    out.append(Violation("(i)", (e,), "psi(R_e) is not an ideal of T_e"))
                    break
            else:
                continue
            break

    # (ii) psi(R_g) = psi(R_{c(g)}) meet beta_g(psi(R_{d(g)}))
    for g in g0.morphisms:
        c, d = g0.cod[g], g0.dom[g]
        lhs = glob.psi_image(c, pa.domains[g])
        shifted = Subspace.from_vectors(
            field,
            t_alg.dim,
            [beta.apply_alpha(g, v) for v in psi_of_component[d].basis],
        )
        rhs = psi_of_component[c].intersect(shifted)
        if lhs != rhs:
            out.append(Violation("(ii)", (g,), "psi(R_g) differs from psi(R_c) meet beta_g(psi(R_d))"))

    # (iii) beta_g(psi_{d(g)}(a)) = psi_{c(g)}(alpha_g(a)) on R_{g^-1}
    for g in g0.morphisms:
        c, d = g0.cod[g], g0.dom[g]
        for a in pa.domains[pa.inv(g)].basis:
            lhs = beta.apply_alpha(g, glob.psi_apply(d, a))
            rhs = glob.psi_apply(c, pa.apply_alpha(g, a))
            if lhs != rhs:
                out.append(Violation("(iii)", (g,), "beta_g psi differs from psi alpha_g"))
                break

    # (iv) T_g is generated by the shifted embedded components
    for g in g0.morphisms:
        c = g0.cod[g]
        total = Subspace.zero(field, t_alg.dim)
        for h in g0.morphisms_into(c):
            shifted = Subspace.from_vectors(
                field,
                t_alg.dim,
                [beta.apply_alpha(h, v) for v in psi_of_component[g0.dom[h]].basis],
            )
            total = total.sum(shifted)
        if total != beta.domains[g]:
            out.append(Violation("(iv)", (g,), "T_g is not the sum of shifted component images"))
    return out


def envelope_component_unital(glob):
    """Per-object unitality of T_e, as needed by the finite-type equivalence."""
    beta = glob.action
    out = {}
    for e in beta.groupoid.objects:
        space = beta.object_components[e]
        if space.dim == 0:
            out[e] = True
            continue
        sub, _ = beta.ambient.subalgebra(space)
        out[e] = sub.find_unit() is not None
    return out


# -- JSON schema -----------------------------------------------------------------------


def action_to_dict(pa, groupoid_ref, algebra_ref):
    fmt = pa.ambient.field.fmt
    return {
        "groupoid": groupoid_ref,
        "algebra": algebra_ref,
        "components": {
            e: [[fmt(c) for c in row] for row in pa.object_components[e].basis]
            for e in pa.groupoid.objects
        },
        "domains": {
            g: [[fmt(c) for c in row] for row in pa.domains[g].basis]
            for g in pa.groupoid.morphisms
        },
        "maps": {
            g: [[fmt(c) for c in row] for row in pa.maps[g].rows]
            for g in pa.groupoid.morphisms
        },
    }


def action_from_dict(d, groupoid, ambient):
    field = ambient.field
    n = ambient.dim
    try:
        comp_entries = d["components"]
        dom_entries = d["domains"]
        map_entries = d["maps"]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"bad action description: {exc}") from exc

    def parse_space(rows, what):
        try:
            return Subspace.from_vectors(field, n, [field.vec(r) for r in rows])
        except (DimensionError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad subspace for {what}: {exc}") from exc

    components = {e: parse_space(comp_entries.get(e, []), e) for e in groupoid.objects}
    domains = {g: parse_space(dom_entries.get(g, []), g) for g in groupoid.morphisms}
    maps = {}
    for g in groupoid.morphisms:
        rows = map_entries.get(g, [])
        try:
            maps[g] = Matrix(field, [field.vec(r) for r in rows]) if rows else Matrix(field, [])
        except (DimensionError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad map for {g}: {exc}") from exc
        if maps[g].nrows == 0:
            maps[g] = Matrix.zeros(field, domains[g].dim, domains[groupoid.inverse[g]].dim)
            if domains[g].dim and domains[groupoid.inverse[g]].dim:
                raise SchemaError(f"missing map for {g}")
    return PartialAction(groupoid, ambient, components, domains, maps)
