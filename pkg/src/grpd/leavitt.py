"""Leavitt path algebras of finite acyclic graphs, built two independent ways.

The first model realizes the algebra as a partial skew group ring over the
free group on the edges, restricted to its finite support: the commutative
function algebra on the set X of paths into sinks, the ideals D_g, and the
shift maps alpha_g induced by prepending/removing path prefixes.  The
second model is a path-pair basis with products driven by the defining
relations, used as an oracle for the first.
"""

from dataclasses import dataclass

from .errors import SchemaError, UnsupportedError
from .exactlin import Subspace
from .algebra import StructureAlgebra


# -- graphs and paths ----------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    id: str
    s: str
    r: str


class DirectedGraph:
    def __init__(self, vertices, edges):
        self.vertices = list(vertices)
        self.edges = [e if isinstance(e, Edge) else Edge(*e) for e in edges]
        self._vidx = {v: i for i, v in enumerate(self.vertices)}
        self._eidx = {e.id: i for i, e in enumerate(self.edges)}
        self.edge_by_id = {e.id: e for e in self.edges}
        if len(self._vidx) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        if len(self._eidx) != len(self.edges):
            raise ValueError("duplicate edge ids")
        for e in self.edges:
            if e.s not in self._vidx or e.r not in self._vidx:
                raise ValueError(f"edge {e.id} has unknown endpoints")

    def out_edges(self, v):
        return [e for e in self.edges if e.s == v]

    def in_edges(self, v):
        return [e for e in self.edges if e.r == v]

    def sinks(self):
        return [v for v in self.vertices if not self.out_edges(v)]

    def __repr__(self):
        return f"DirectedGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class Path:
    """Edge path, or a trivial path anchored at a vertex when edges is empty."""

    source: str
    edges: tuple

    @property
    def length(self):
        return len(self.edges)

    def is_trivial(self):
        return not self.edges


def trivial_path(v):
    return Path(v, ())


def path_range(graph, p):
    return graph.edge_by_id[p.edges[-1]].r if p.edges else p.source


def path_label(p):
    return ".".join(p.edges) if p.edges else f"@{p.source}"


def _path_key(graph, p):
    return (p.length, graph._vidx[p.source], tuple(graph._eidx[e] for e in p.edges))


def all_paths(graph):
    """Every finite path, trivial ones included, ordered by (length, source, edges).

    Only meaningful for acyclic graphs, where the set is finite.
    """
    paths = [trivial_path(v) for v in graph.vertices]
    frontier = list(paths)
    while frontier:
        nxt = []
        for p in frontier:
            for e in graph.out_edges(path_range(graph, p)):
                nxt.append(Path(p.source if p.edges else e.s, p.edges + (e.id,)))
        paths.extend(nxt)
        frontier = nxt
    paths.sort(key=lambda p: _path_key(graph, p))
    return paths


def simple_cycles(graph):
    """All cycles (closed paths with distinct intermediate vertices), as edge tuples."""
    out = []
    for start in graph.vertices:
        stack = [(start, (), frozenset())]
        while stack:
            v, edges, seen = stack.pop()
            nseen = seen | {v}
            for e in graph.out_edges(v):
                if e.r == start:
                    cyc = edges + (e.id,)
                    # report each cycle once, anchored at its smallest vertex
                    verts = [graph.edge_by_id[x].s for x in cyc]
                    if min(verts, key=lambda w: graph._vidx[w]) == start:
                        out.append(cyc)
                elif e.r not in nseen:
                    stack.append((e.r, edges + (e.id,), nseen))
    out.sort(key=lambda cyc: (len(cyc), tuple(graph._eidx[e] for e in cyc)))
    return out


@dataclass
class GraphReport:
    vertices: int
    edges: int
    sinks: list
    cycles: list
    acyclic: bool
    finite: bool
    paths: list | None

    def path_count(self):
        return len(self.paths) if self.paths is not None else None


def graph_analysis(graph):
    """Sinks, exhaustive cycle list, acyclicity, and the path census when acyclic."""
    cycles = simple_cycles(graph)
    acyclic = not cycles
    return GraphReport(
        vertices=len(graph.vertices),
        edges=len(graph.edges),
        sinks=graph.sinks(),
        cycles=cycles,
        acyclic=acyclic,
        finite=True,
        paths=all_paths(graph) if acyclic else None,
    )


def hereditary_saturated_subsets(graph):
    """All hereditary and saturated vertex sets, by exhaustive search."""
    vs = graph.vertices
    out = []
    for mask in range(1 << len(vs)):
        h = {vs[i] for i in range(len(vs)) if mask & (1 << i)}
        hereditary = all(e.r in h for e in graph.edges if e.s in h)
        if not hereditary:
            continue
        saturated = True
        for v in vs:
            outs = graph.out_edges(v)
            if outs and all(e.r in h for e in outs) and v not in h:
                saturated = False
                break
        if saturated:
            out.append(tuple(sorted(h, key=lambda v: graph._vidx[v])))
    out.sort(key=lambda t: (len(t), t))
    return out


def paths_into_sink(graph, v):
    """Paths ending at the sink v, the trivial one included."""
    return [p for p in all_paths(graph) if path_range(graph, p) == v]


# -- reduced words of the free group on the edges -----------------------------------


@dataclass(frozen=True)
class Word:
    """Reduced word a b^{-1} over path parts; (None, None) is the group identity."""

    a: Path | None
    b: Path | None

    def is_identity(self):
        return self.a is None


IDENTITY = Word(None, None)


def make_word(graph, a, b):
    """Normalize a pair of paths with common range into a reduced word.

    Common trailing edges cancel; a fully cancelled pair is the identity.
    Returns None when the ranges disagree (the word then has empty domain).
    """
    if path_range(graph, a) != path_range(graph, b):
        return None
    ea, eb = list(a.edges), list(b.edges)
    while ea and eb and ea[-1] == eb[-1]:
        ea.pop()
        eb.pop()
    if not ea and not eb:
        return IDENTITY
    pa = Path(a.source, tuple(ea)) if ea else trivial_path(_end_after(graph, a, len(ea)))
    pb = Path(b.source, tuple(eb)) if eb else trivial_path(_end_after(graph, b, len(eb)))
    return Word(pa, pb)


def _end_after(graph, p, k):
    """Range of the first k edges of p (its source when k = 0)."""
    if k == 0:
        return p.source
    return graph.edge_by_id[p.edges[k - 1]].r


def word_inverse(w):
    if w.is_identity():
        return w
    return Word(w.b, w.a)


def word_label(w):
    if w.is_identity():
        return "1"
    pos = path_label(w.a) if not w.a.is_trivial() else ""
    neg = f"({path_label(w.b)})^-1" if not w.b.is_trivial() else ""
    return (pos + neg) if (pos or neg) else "1"


def word_mul(graph, g, h):
    """Free-group product of two support words.

    Returns the reduced product when it is again of the form (path)(path)^{-1}
    with matching ranges, and None otherwise; in the latter case the
    corresponding ideal is zero and skew-ring products vanish.
    """
    if g.is_identity():
        return h
    if h.is_identity():
        return g
    b1, a2 = g.b, h.a
    k = 0
    while k < b1.length and k < a2.length and b1.edges[k] == a2.edges[k]:
        k += 1
    if k < b1.length and k < a2.length:
        return None  # reduced mixed form, outside the support class
    if k == b1.length and k < a2.length:
        tail = a2.edges[k:]
        if graph.edge_by_id[tail[0]].s != path_range(graph, g.a):
            return None
        if g.a.is_trivial():
            new_a = Path(graph.edge_by_id[tail[0]].s, tail)
        else:
            new_a = Path(g.a.source, g.a.edges + tail)
        return make_word(graph, new_a, h.b)
    if k == a2.length and k < b1.length:
        tail = b1.edges[k:]
        if graph.edge_by_id[tail[0]].s != path_range(graph, h.b):
            return None
        if h.b.is_trivial():
            new_b = Path(graph.edge_by_id[tail[0]].s, tail)
        else:
            new_b = Path(h.b.source, h.b.edges + tail)
        return make_word(graph, g.a, new_b)
    return make_word(graph, g.a, h.b)


# -- the X space ----------------------------------------------------------------------


def _extends(graph, xi, a):
    """Whether xi starts with the path a (source condition for trivial a)."""
    if a.is_trivial():
        return xi.source == a.source
    if xi.length < a.length:
        return False
    return xi.source == a.source and xi.edges[: a.length] == a.edges


class XSpace:
    """The finite set X of paths into sinks, with its word-indexed subsets."""

    def __init__(self, graph):
        report = graph_analysis(graph)
        if not report.acyclic:
            raise UnsupportedError("X space needs a finite acyclic graph (no infinite paths)")
        self.graph = graph
        sinks = set(report.sinks)
        self.points = [p for p in report.paths if path_range(graph, p) in sinks]
        self.index = {p: i for i, p in enumerate(self.points)}
        self.words = self._enumerate_words()

    def _enumerate_words(self):
        graph = self.graph
        by_range = {}
        for p in all_paths(graph):
            by_range.setdefault(path_range(graph, p), []).append(p)
        words = {IDENTITY}
        for _, group in sorted(by_range.items(), key=lambda kv: graph._vidx[kv[0]]):
            for a in group:
                for b in group:
                    if not a.is_trivial() or not b.is_trivial():
                        if a.edges and b.edges and a.edges[-1] == b.edges[-1]:
                            continue  # not reduced; equals a shorter word
                        w = make_word(graph, a, b)
                        if w is not None and not w.is_identity():
                            if self.x_set(w):
                                words.add(w)
        out = sorted(
            (w for w in words if not w.is_identity()),
            key=lambda w: (_path_key(graph, w.a), _path_key(graph, w.b)),
        )
        return [IDENTITY] + out

    def x_set(self, w):
        """Indices of the subset X_w of X."""
        if w.is_identity():
            return list(range(len(self.points)))
        return [i for i, xi in enumerate(self.points) if _extends(self.graph, xi, w.a)]

    def x_vertex(self, v):
        """Indices of X_v = {xi : s(xi) = v}, the vertex indicator support."""
        return [i for i, xi in enumerate(self.points) if xi.source == v]

    def indicator(self, field, indices):
        vec = field.zero_vec(len(self.points))
        for i in indices:
            vec[i] = field.one
        return vec


def theta_map(xs, w):
    """The bijection X_{w^-1} -> X_w: strip the b part, glue the a part."""
    graph = xs.graph
    if w.is_identity():
        return {p: p for p in xs.points}
    out = {}
    for i in xs.x_set(word_inverse(w)):
        xi = xs.points[i]
        tail = xi.edges[w.b.length:]
        if tail:
            if w.a.is_trivial():
                img = Path(graph.edge_by_id[tail[0]].s, tail)
            else:
                img = Path(w.a.source, w.a.edges + tail)
        else:
            img = w.a if not w.a.is_trivial() else trivial_path(path_range(graph, w.a))
        out[xi] = img
    return out


# -- model 1: the skew ring over the free group, restricted to its support ---------------


class GrSkewModel:
    """D(X) together with the ideals D_g, the maps alpha_g, and the skew ring."""

    def __init__(self, graph, field):
        self.graph = graph
        self.field = field
        self.xs = XSpace(graph)
        xs = self.xs
        npts = len(xs.points)
        gens = [xs.indicator(field, xs.x_set(w)) for w in xs.words]
        gens += [xs.indicator(field, xs.x_vertex(v)) for v in graph.vertices]
        self.d_e = Subspace.from_vectors(field, npts, gens)
        self.domains = {}
        for w in xs.words:
            if w.is_identity():
                self.domains[w] = self.d_e
                continue
            one_w = xs.indicator(field, xs.x_set(w))
            prods = [[a * b for a, b in zip(one_w, v)] for v in self.d_e.basis]
            self.domains[w] = Subspace.from_vectors(field, npts, prods)
        self._theta_inv = {w: theta_map(xs, word_inverse(w)) for w in xs.words}
        self.algebra = self._build_algebra()

    def alpha_apply(self, w, f):
        """alpha_w(f) = f o theta_{w^-1}, on functions supported in X_{w^-1}."""
        xs = self.xs
        out = self.field.zero_vec(len(xs.points))
        theta_inv = self._theta_inv[w]
        for i in xs.x_set(w):
            xi = xs.points[i]
            out[i] = f[xs.index[theta_inv[xi]]]
        return out

    def _build_algebra(self):
        xs = self.xs
        field = self.field
        offsets = {}
        off = 0
        labels = []
        grading = {}
        for w in xs.words:
            offsets[w] = off
            d = self.domains[w].dim
            for j in range(d):
                grading[off + j] = word_label(w)
                labels.append(f"{word_label(w)}:{j}")
            off += d
        total = off
        self.offsets = offsets

        table = [[field.zero_vec(total) for _ in range(total)] for _ in range(total)]
        for g in xs.words:
            dg = self.domains[g]
            if dg.dim == 0:
                continue
            ginv = word_inverse(g)
            for h in xs.words:
                dh = self.domains[h]
                if dh.dim == 0:
                    continue
                gh = word_mul(self.graph, g, h)
                for i, r in enumerate(dg.basis):
                    pulled = self.alpha_apply(ginv, r)
                    for j, rp in enumerate(dh.basis):
                        x = [a * b for a, b in zip(pulled, rp)]
                        if not any(x):
                            continue
                        y = self.alpha_apply(g, x)
                        if gh is None or gh not in offsets:
                            if any(y):
                                raise RuntimeError(
                                    "nonzero product escaped the support; model is inconsistent"
                                )
                            continue
                        coords = self.domains[gh].coords(y)
                        vec = field.zero_vec(total)
                        for k, c in enumerate(coords):
                            vec[offsets[gh] + k] = c
                        table[offsets[g] + i][offsets[h] + j] = vec

        alg = StructureAlgebra(field, total, table, labels=labels, grading=grading)
        unit = field.zero_vec(total)
        ones = xs.indicator(field, xs.x_set(IDENTITY))
        for k, c in enumerate(self.d_e.coords(ones)):
            unit[offsets[IDENTITY] + k] = c
        if all(
            alg.multiply(unit, alg.basis_vector(j)) == alg.basis_vector(j)
            and alg.multiply(alg.basis_vector(j), unit) == alg.basis_vector(j)
            for j in range(total)
        ):
            alg.unit = unit
        return alg

    def element(self, w, f):
        """The skew-ring element (f delta_w) for f in D_w."""
        vec = self.field.zero_vec(self.algebra.dim)
        for k, c in enumerate(self.domains[w].coords(f)):
            vec[self.offsets[w] + k] = c
        return vec

    def edge_word(self, edge_id):
        e = self.graph.edge_by_id[edge_id]
        return make_word(self.graph, Path(e.s, (edge_id,)), trivial_path(e.r))

    def generator_images(self):
        """phi on generators: vertices to 1_v delta_1, edges to 1_f delta_f."""
        xs = self.xs
        field = self.field
        out = {}
        for v in self.graph.vertices:
            out[("v", v)] = self.element(IDENTITY, xs.indicator(field, xs.x_vertex(v)))
        for e in self.graph.edges:
            w = self.edge_word(e.id)
            winv = word_inverse(w)
            out[("e", e.id)] = self.element(w, xs.indicator(field, xs.x_set(w)))
            out[("e*", e.id)] = self.element(winv, xs.indicator(field, xs.x_set(winv)))
        return out


def build_gr_skew_ring(graph, field):
    """The Leavitt path algebra as a partial skew group ring over the support."""
    return GrSkewModel(graph, field).algebra


# -- model 2: the path-pair oracle ------------------------------------------------------


class PathPairModel:
    """Basis mu nu* over pairs of sink paths; products follow the relations."""

    def __init__(self, graph, field):
        report = graph_analysis(graph)
        if not report.acyclic:
            raise UnsupportedError("path-pair model needs a finite acyclic graph")
        self.graph = graph
        self.field = field
        sinks = report.sinks
        self.pairs = []
        for v in sinks:
            into = paths_into_sink(graph, v)
            for mu in into:
                for nu in into:
                    self.pairs.append((mu, nu))
        self.index = {p: i for i, p in enumerate(self.pairs)}
        self.algebra = self._build_algebra()

    def _resolve(self, nu, sigma):
        """nu* sigma as a path correction: ("right", p) for p*, ("left", p), or None."""
        graph = self.graph
        if nu == sigma:
            return ("unit", trivial_path(path_range(graph, nu)))
        if _extends(graph, nu, sigma):
            tail = nu.edges[sigma.length:]
            start = graph.edge_by_id[tail[0]].s if tail else path_range(graph, nu)
            return ("right", Path(start, tail))  # nu = sigma p, nu* sigma = p*
        if _extends(graph, sigma, nu):
            tail = sigma.edges[nu.length:]
            start = graph.edge_by_id[tail[0]].s if tail else path_range(graph, sigma)
            return ("left", Path(start, tail))  # sigma = nu p, nu* sigma = p
        return None

    def _build_algebra(self):
        field = self.field
        n = len(self.pairs)
        table = [[field.zero_vec(n) for _ in range(n)] for _ in range(n)]
        for i, (mu, nu) in enumerate(self.pairs):
            for j, (sigma, tau) in enumerate(self.pairs):
                res = self._resolve(nu, sigma)
                if res is None:
                    continue
                kind, p = res
                if kind == "unit":
                    target = (mu, tau)
                elif kind == "left":
                    # mu (p tau*) with p starting at a sink: p must be trivial
                    if not p.is_trivial():
                        continue
                    target = (mu, tau)
                else:
                    if not p.is_trivial():
                        continue
                    target = (mu, tau)
                table[i][j] = field.unit_vec(n, self.index[target])
        labels = [f"{path_label(mu)}({path_label(nu)})*" for mu, nu in self.pairs]
        alg = StructureAlgebra(field, n, table, labels=labels)
        unit = field.zero_vec(n)
        for mu, nu in self.pairs:
            if mu == nu:
                unit[self.index[(mu, nu)]] = field.one
        alg.unit = unit
        return alg


def lpa_path_pair_oracle(graph, field):
    """Independent brute-force model of the Leavitt path algebra."""
    return PathPairModel(graph, field).algebra


# -- the generator isomorphism check ------------------------------------------------------


@dataclass
class PhiReport:
    dims: tuple
    dims_match: bool
    relations_ok: bool
    first_failure: str | None

    def __bool__(self):
        return self.dims_match and self.relations_ok


def phi_isomorphism_check(graph, field):
    """Check relations (1)-(4) on the generator images inside the skew model.

    Also compares the dimensions of the two models; reports the first
    failing relation when one breaks.
    """
    model = GrSkewModel(graph, field)
    oracle = PathPairModel(graph, field)
    alg = model.algebra
    gens = model.generator_images()
    mul = alg.multiply

    def eq(x, y):
        return x == y

    failure = None

    def check(cond, desc):
        nonlocal failure
        if failure is None and not cond:
            failure = desc

    zero = field.zero_vec(alg.dim)
    for v in graph.vertices:
        for w in graph.vertices:
            prod = mul(gens[("v", v)], gens[("v", w)])
            expect = gens[("v", v)] if v == w else zero
            check(eq(prod, expect), f"vertex idempotent relation at ({v},{w})")
    for e in graph.edges:
        f = gens[("e", e.id)]
        fs = gens[("e*", e.id)]
        check(eq(mul(gens[("v", e.s)], f), f), f"(1) s(f) f = f at {e.id}")
        check(eq(mul(f, gens[("v", e.r)]), f), f"(1) f r(f) = f at {e.id}")
        check(eq(mul(gens[("v", e.r)], fs), fs), f"(2) r(f) f* = f* at {e.id}")
        check(eq(mul(fs, gens[("v", e.s)]), fs), f"(2) f* s(f) = f* at {e.id}")
    for e in graph.edges:
        for ep in graph.edges:
            prod = mul(gens[("e*", e.id)], gens[("e", ep.id)])
            expect = gens[("v", e.r)] if e.id == ep.id else zero
            check(eq(prod, expect), f"(3) f* f' at ({e.id},{ep.id})")
    for v in graph.vertices:
        outs = graph.out_edges(v)
        if not outs:
            continue
        acc = field.zero_vec(alg.dim)
        for e in outs:
            term = mul(gens[("e", e.id)], gens[("e*", e.id)])
            acc = [a + b for a, b in zip(acc, term)]
        check(eq(acc, gens[("v", v)]), f"(4) v = sum f f* at {v}")

    dims = (alg.dim, oracle.algebra.dim)
    return PhiReport(
        dims=dims,
        dims_match=dims[0] == dims[1],
        relations_ok=failure is None,
        first_failure=failure,
    )


# -- the characterization report -----------------------------------------------------------


@dataclass
class LpaReport:
    acyclic: bool
    artinian_verdict: str
    dim: int | None
    unital: object
    semisimple: object
    block_sizes: list | None
    sink_path_counts: dict | None
    blocks_match_sinks: object
    hereditary_saturated: list
    trivial_hs_lattice: bool
    one_block: object

    def to_dict(self):
        return {
            "acyclic": self.acyclic,
            "artinian": self.artinian_verdict,
            "dim": self.dim,
            "unital": self.unital,
            "semisimple": self.semisimple,
            "block_sizes": self.block_sizes,
            "sink_path_counts": self.sink_path_counts,
            "blocks_match_sinks": self.blocks_match_sinks,
            "hereditary_saturated": [list(h) for h in self.hereditary_saturated],
            "trivial_hs_lattice": self.trivial_hs_lattice,
            "one_block": self.one_block,
        }


def _isqrt(n):
    r = int(n ** 0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def lpa_characterization(graph, field):
    """Finite-dimensionality classification plus the block/sink comparison.

    Cyclic graphs are classified as not artinian and no algebra is built.
    For acyclic graphs the block sizes of the semisimple decomposition are
    compared against independent path counts into each sink.
    """
    hs = hereditary_saturated_subsets(graph)
    trivial_hs = [h for h in hs if h and len(h) != len(graph.vertices)] == []
    report = graph_analysis(graph)
    if not report.acyclic:
        return LpaReport(
            acyclic=False,
            artinian_verdict="not artinian: the graph has a cycle, so the algebra is infinite-dimensional",
            dim=None,
            unital=None,
            semisimple=None,
            block_sizes=None,
            sink_path_counts=None,
            blocks_match_sinks=None,
            hereditary_saturated=hs,
            trivial_hs_lattice=trivial_hs,
            one_block=None,
        )
    alg = build_gr_skew_ring(graph, field)
    counts = {v: len(paths_into_sink(graph, v)) for v in report.sinks}
    unital = alg.find_unit() is not None
    try:
        semisimple = alg.is_semisimple()
        blocks = alg.wedderburn_blocks() if semisimple else None
    except UnsupportedError as exc:
        semisimple = f"unsupported: {exc}"
        blocks = None
    sizes = None
    match = None
    one_block = None
    if blocks is not None:
        sizes = sorted(_isqrt(d) for d in blocks.dims())
        match = sizes == sorted(counts.values()) and alg.dim == sum(
            c * c for c in counts.values()
        )
        one_block = len(blocks) == 1
    return LpaReport(
        acyclic=True,
        artinian_verdict="artinian: finite-dimensional over the base field",
        dim=alg.dim,
        unital=unital,
        semisimple=semisimple,
        block_sizes=sizes,
        sink_path_counts=counts,
        blocks_match_sinks=match,
        hereditary_saturated=hs,
        trivial_hs_lattice=trivial_hs,
        one_block=one_block,
    )


# -- JSON schema ------------------------------------------------------------------------------


def graph_to_dict(graph):
    return {
        "vertices": list(graph.vertices),
        "edges": [{"id": e.id, "s": e.s, "r": e.r} for e in graph.edges],
    }


def graph_from_dict(d):
    try:
        vertices = list(d["vertices"])
        edges = [Edge(e["id"], e["s"], e["r"]) for e in d["edges"]]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"bad graph description: {exc}") from exc
    try:
        return DirectedGraph(vertices, edges)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
