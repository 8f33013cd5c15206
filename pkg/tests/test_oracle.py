import pytest

from ilsreconf import oracle
from ilsreconf.core import ILSInstance, InfeasibleError
from ilsreconf.generators import gen_diameter_family, gen_hypercube, random_horn, random_tvpi
from ilsreconf.tvpi import median_vec


def test_neighbors(eq3, chain22):
    assert oracle.neighbors(eq3, (1, 1)) == []
    assert oracle.neighbors(chain22, (1, 1)) == [(1, 0), (2, 1)]
    assert oracle.neighbors(ILSInstance.from_rows([], [], 1, 1), (0,)) == [(1,)]
    with pytest.raises(InfeasibleError):
        oracle.neighbors(eq3, (0, 1))


def test_reachability_examples(eq3, chain22):
    assert oracle.bfs_reachable(eq3, (0, 0), (2, 2)) == (False, None)
    ok, path = oracle.bfs_reachable(chain22, (0, 0), (2, 2))
    assert ok and path.length == 4
    ok, path = oracle.bfs_reachable(chain22, (1, 1), (1, 1))
    assert ok and path.length == 0


def test_graph_stats_examples(eq3, cube3):
    st = oracle.graph_stats(eq3)
    assert st.component_count == 3 and st.component_sizes == [1, 1, 1]
    assert all(st.diameter_of(k) == 0 for k in range(3))
    fam = gen_diameter_family(2, 2)
    st = oracle.graph_stats(fam.instance)
    k = st.component_index(fam.s)
    assert st.component_sizes[k] == 5 and st.is_path(k) and st.diameter_of(k) == 4
    st = oracle.graph_stats(cube3)
    assert st.component_count == 1 and st.diameter == 3


def test_budget_is_reported_distinctly():
    with pytest.raises(oracle.BudgetExceeded):
        oracle.bfs_reachable(gen_hypercube(12), (0,) * 12, (1,) * 12, max_states=100)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("ILS_MAX_STATES", "10")
    assert oracle.default_budget() == 10
    with pytest.raises(oracle.BudgetExceeded):
        oracle.graph_stats(gen_hypercube(4))


def _bfs_dist(inst, s, t):
    """Independent plain-Python BFS over neighbor lists."""
    seen, frontier, dist = {s}, [s], 0
    while frontier:
        if t in frontier:
            return dist
        nxt = []
        for x in frontier:
            for y in oracle.neighbors(inst, x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier, dist = nxt, dist + 1
    return None


def test_shortest_distance_matches_plain_bfs(rng):
    for _ in range(40):
        inst, p = random_tvpi(rng, 3, 2, 3)
        pts = oracle.state_space(inst).feasible_points()
        t = rng.choice(pts)
        assert oracle.shortest_distance(inst, p, t) == _bfs_dist(inst, p, t)


def test_components_closed_under_min_and_median(rng):
    for _ in range(30):
        inst, p = random_horn(rng, 3, 2, 4)
        comp = oracle.component_of(inst, p)
        cs = set(comp)
        for x in comp:
            for y in comp:
                assert tuple(map(min, x, y)) in cs
        inst, p = random_tvpi(rng, 3, 2, 4)
        comp = oracle.component_of(inst, p)
        cs = set(comp)
        for x in comp[:6]:
            for y in comp[:6]:
                for z in comp[:6]:
                    assert median_vec(x, y, z) in cs
