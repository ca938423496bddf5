"""
Shortest-path metric of the unit circle augmented with shortcuts.

A path may leave the circle only at a shortcut endpoint and must traverse the
whole chord. Paths therefore turn only at endpoints or at p, q, which makes the
graph on {p, q} ∪ endpoints exact:
- distance: networkx Dijkstra from both ends plus a tight-edge DAG that picks
  the witness with the fewest shortcuts, then the earliest endpoint sequence
- diameter_bounds: all-pairs node distances (scipy csgraph) combined with the
  two circular neighbours of every candidate point, evaluated in numpy blocks
"""

import logging
import math

import networkx as nx
import numpy as np
from joblib import Parallel, delayed
from scipy.sparse import csgraph

import config
from geometry.arcs import deep_umbra, in_umbra, umbra
from geometry.errors import DomainError, NumericError
from geometry.models import ArcLeg, DiameterBound, PathWitness, ShortcutLeg
from geometry.utils.calculations import TWO_PI, ccw_angle, circle_distance, normalize_angle

log = logging.getLogger(__name__)


# ─── Exact single-pair distance ────────────────────────────────────

def distance(shortcuts, p, q):
    """
    Shortest path length between p and q and a witness path.

    Args:
        shortcuts (Configuration): Shortcuts available to the path
        p (float): First point, radians
        q (float): Second point, radians

    Returns:
        tuple: (length, PathWitness)
    """
    p = normalize_angle(p)
    q = normalize_angle(q)
    if q < p:
        length, witness = distance(shortcuts, q, p)
        return length, witness.reversed()

    direct = circle_distance(p, q)
    graph, nodes, assign = _build_graph(shortcuts, (p, q))
    source, target = assign[0], assign[1]
    if source == target or len(shortcuts) == 0:
        return direct, _arc_witness(p, q, direct)

    from_p = nx.single_source_dijkstra_path_length(graph, source, weight='weight')
    best = from_p.get(target, math.inf)
    if direct <= best + config.PATH_TIE_TOL:
        return direct, _arc_witness(p, q, direct)

    from_q = nx.single_source_dijkstra_path_length(graph, target, weight='weight')
    legs = _tight_witness(shortcuts, graph, nodes, from_p, from_q, source, target, best)
    return best, PathWitness(p, q, best, tuple(legs))


def single_shortcut_distance(s, p, q):
    """Distance between p and q when only the shortcut `s` is available."""
    direct = circle_distance(p, q)
    via_u = circle_distance(p, s.u) + s.length + circle_distance(s.v, q)
    via_v = circle_distance(p, s.v) + s.length + circle_distance(s.u, q)
    return min(direct, via_u, via_v)


def witness_violations(shortcuts, p, q, length, witness, eps=None):
    """
    Check a returned path against the structural facts every shortest path obeys.

    Returns:
        list[str]: One message per violated rule; empty when the witness is consistent
    """
    eps = config.WITNESS_EPS if eps is None else eps
    problems = []
    direct = circle_distance(p, q)

    leg_sum = sum(leg.length for leg in witness.legs)
    if abs(leg_sum - witness.total) > 1e-9 or abs(witness.total - length) > 1e-9:
        problems.append(f"legs sum to {leg_sum}, reported length {length}")
    if length > direct + config.PATH_TIE_TOL:
        problems.append(f"length {length} exceeds circle distance {direct}")

    used = sorted(set(witness.shortcut_indices))
    saving = 2 * sum(shortcuts[i].detour for i in used)
    if length < direct - saving - 1e-9:
        problems.append(f"length {length} below detour bound {direct - saving}")

    chord_legs = witness.shortcut_legs
    if chord_legs:
        first, last = chord_legs[0], chord_legs[-1]
        if in_umbra(first.shortcut, witness.p, -eps):
            problems.append(f"path starts inside the umbra of shortcut {first.index}")
        if in_umbra(last.shortcut, witness.q, -eps):
            problems.append(f"path ends inside the umbra of shortcut {last.index}")

    for index in used:
        deep = deep_umbra(shortcuts[index])
        if deep.contains(witness.p, -eps) or deep.contains(witness.q, -eps):
            problems.append(f"shortcut {index} used from inside its deep umbra")
    return problems


def _arc_witness(p, q, length):
    if length <= 0:
        return PathWitness(p, q, 0.0, ())
    return PathWitness(p, q, length, (ArcLeg(p, q, ccw_angle(p, q) <= math.pi, length),))


def _merge_positions(positions):
    """Sorted distinct node angles and, for each input angle, the index of its node."""
    order = sorted(range(len(positions)), key=lambda i: positions[i])
    nodes = []
    assign = [0] * len(positions)
    for idx in order:
        x = positions[idx]
        if not nodes or x - nodes[-1] > config.NODE_MERGE_TOL:
            nodes.append(x)
        assign[idx] = len(nodes) - 1
    if len(nodes) > 1 and nodes[0] + TWO_PI - nodes[-1] <= config.NODE_MERGE_TOL:
        last = len(nodes) - 1
        assign = [0 if a == last else a for a in assign]
        nodes.pop()
    return nodes, assign


def _build_graph(shortcuts, points):
    positions = list(points) + shortcuts.endpoints()
    nodes, assign = _merge_positions(positions)
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(len(nodes)))
    if len(nodes) > 1:
        for i in range(len(nodes)):
            j = (i + 1) % len(nodes)
            graph.add_edge(i, j, weight=ccw_angle(nodes[i], nodes[j]), kind='arc', start=i)
    offset = len(points)
    for k, s in enumerate(shortcuts):
        a, b = assign[offset + 2 * k], assign[offset + 2 * k + 1]
        if a != b:
            graph.add_edge(a, b, weight=s.length, kind='shortcut', index=k)
    return graph, nodes, assign


def _tight_witness(shortcuts, graph, nodes, from_p, from_q, source, target, best):
    tol = config.PATH_TIE_TOL
    dag = nx.MultiDiGraph()
    dag.add_node(source)
    for x, y, data in graph.edges(data=True):
        for a, b in ((x, y), (y, x)):
            if a not in from_p or b not in from_q:
                continue
            reach = from_p[a] + data['weight']
            if reach <= from_p[b] + tol and reach + from_q[b] <= best + tol:
                dag.add_edge(a, b, **data)

    try:
        order = list(nx.topological_sort(dag))
    except nx.NetworkXUnfeasible as exc:
        raise NumericError("tight shortest-path edges contain a cycle") from exc

    # label: (shortcut count, endpoint sequence); smaller is preferred
    labels = {source: (0, ())}
    parent = {}
    for node in order:
        if node not in labels:
            continue
        count, sequence = labels[node]
        for _, nxt, data in dag.out_edges(node, data=True):
            if data['kind'] == 'shortcut':
                candidate = (count + 1, sequence + (nodes[node], nodes[nxt]))
            else:
                candidate = (count, sequence)
            if nxt not in labels or candidate < labels[nxt]:
                labels[nxt] = candidate
                parent[nxt] = (node, data)
    if target not in labels:
        raise NumericError("no tight path reaches the target")

    steps = []
    node = target
    while node != source:
        prev, data = parent[node]
        steps.append((prev, node, data))
        node = prev
    steps.reverse()

    legs = []
    for a, b, data in steps:
        if data['kind'] == 'shortcut':
            index = data['index']
            legs.append(ShortcutLeg(index, shortcuts[index], nodes[a], nodes[b], data['weight']))
            continue
        ccw = data['start'] == a
        if legs and isinstance(legs[-1], ArcLeg) and legs[-1].ccw == ccw:
            prev_leg = legs.pop()
            legs.append(ArcLeg(prev_leg.start, nodes[b], ccw, prev_leg.length + data['weight']))
        else:
            legs.append(ArcLeg(nodes[a], nodes[b], ccw, data['weight']))
    return legs


# ─── Certified diameter ─────────────────────────────────────────────

def diameter_bounds(shortcuts, h=None, n_jobs=None):
    """
    Certified enclosure [lo, hi] of the diameter of a configuration.

    lo is the largest distance over a mesh of step ≤ h (plus endpoints and, for
    small configurations, umbra boundaries); d is 1-Lipschitz in each argument,
    so the true diameter is at most lo + h and hi = lo + 2h is certified.

    Args:
        shortcuts (Configuration): Configuration to certify
        h (float): Grid step, default config.DEFAULT_STEP
        n_jobs (int): joblib thread workers, default config.N_JOBS

    Returns:
        DiameterBound: bounds, witness pair and its shortest path
    """
    h = config.DEFAULT_STEP if h is None else float(h)
    if not (h > 0 and math.isfinite(h)):
        raise DomainError(f"grid step must be positive, got {h}")
    n_jobs = config.N_JOBS if n_jobs is None else n_jobs

    nodes, matrix = node_distances(shortcuts)
    points = candidate_points(shortcuts, h)
    left, right, dist_left, dist_right = _neighbours(points, nodes)
    block = config.GRID_BLOCK_SIZE
    log.info("certifying %d shortcuts: %d nodes, %d candidates, h=%g",
             len(shortcuts), 0 if nodes is None else len(nodes), len(points), h)

    results = Parallel(n_jobs=n_jobs, prefer='threads')(
        delayed(_block_maximum)(start, min(start + block, len(points)), points,
                                matrix, left, right, dist_left, dist_right)
        for start in range(0, len(points), block)
    )
    value, i, j = max(results, key=lambda r: (r[0], -r[1], -r[2]))
    p, q = float(points[i]), float(points[j])
    _, path = distance(shortcuts, p, q)
    return DiameterBound(lo=float(value), hi=float(value) + 2 * h, p=p, q=q, step=h, path=path)


def node_distances(shortcuts):
    """Sorted endpoint nodes and their all-pairs shortest-path matrix (None, None if empty)."""
    positions = shortcuts.endpoints()
    if not positions:
        return None, None
    nodes, assign = _merge_positions(positions)
    n = len(nodes)
    weights = np.full((n, n), np.inf)
    if n > 1:
        idx = np.arange(n)
        nxt = (idx + 1) % n
        arcs = np.mod(np.asarray(nodes)[nxt] - np.asarray(nodes), TWO_PI)
        np.minimum.at(weights, (idx, nxt), arcs)
        np.minimum.at(weights, (nxt, idx), arcs)
    ends = np.asarray(assign).reshape(-1, 2)
    lengths = np.array([s.length for s in shortcuts])
    keep = ends[:, 0] != ends[:, 1]
    np.minimum.at(weights, (ends[keep, 0], ends[keep, 1]), lengths[keep])
    np.minimum.at(weights, (ends[keep, 1], ends[keep, 0]), lengths[keep])
    np.fill_diagonal(weights, np.inf)

    graph = csgraph.csgraph_from_dense(weights, null_value=np.inf)
    matrix = csgraph.shortest_path(graph, method='D', directed=False)
    return np.asarray(nodes), matrix


def candidate_points(shortcuts, h):
    """Mesh of step ≤ h with shortcut endpoints, umbra boundaries and their antipodes."""
    count = max(int(math.ceil(TWO_PI / h)), 1)
    mesh = np.arange(count) * (TWO_PI / count)
    extras = list(shortcuts.endpoints())
    if len(shortcuts) <= config.MAX_BOUNDARY_CANDIDATES:
        for s in shortcuts:
            inner, outer = umbra(s)
            for arc in (inner, outer, deep_umbra(s)):
                extras.extend((arc.start, arc.end))
    extras = np.asarray(extras, dtype=float)
    points = np.concatenate([mesh, extras, extras + math.pi])
    points = np.mod(points, TWO_PI)
    points[points >= TWO_PI - config.ANGLE_WRAP_TOL] = 0.0
    return np.unique(points)


def _neighbours(points, nodes):
    if nodes is None:
        return None, None, None, None
    n = len(nodes)
    left = (np.searchsorted(nodes, points, side='right') - 1) % n
    right = (left + 1) % n
    dist_left = np.mod(points - nodes[left], TWO_PI)
    dist_right = np.mod(nodes[right] - points, TWO_PI)
    return left, right, dist_left, dist_right


def _block_maximum(start, stop, points, matrix, left, right, dist_left, dist_right):
    ccw = np.mod(points[None, :] - points[start:stop, None], TWO_PI)
    best = np.minimum(ccw, TWO_PI - ccw)
    if matrix is not None:
        from_left = matrix[left[start:stop]]
        from_right = matrix[right[start:stop]]
        dl = dist_left[start:stop, None]
        dr = dist_right[start:stop, None]
        via = np.minimum(
            np.minimum(dl + from_left[:, left] + dist_left, dl + from_left[:, right] + dist_right),
            np.minimum(dr + from_right[:, left] + dist_left, dr + from_right[:, right] + dist_right),
        )
        best = np.minimum(best, via)
    # pairs closer than the minimum diameter cannot realize the maximum
    window = (ccw >= config.MIN_DIAMETER) & (ccw <= TWO_PI - config.MIN_DIAMETER)
    best = np.where(window, best, -np.inf)
    flat = int(np.argmax(best))
    i, j = divmod(flat, best.shape[1])
    return float(best[i, j]), start + i, j
