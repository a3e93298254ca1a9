"""Regenerates the CSV fixtures by brute force over labeled graphs.

Independent of the C++ code on purpose. Forest counts beyond brute-force
reach use the rooted-component recursion with Cayley's n^(n-2).
"""
import itertools
from math import comb
from pathlib import Path

HERE = Path(__file__).parent


def digraphs(n):
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    for mask in range(1 << len(pairs)):
        yield [p for i, p in enumerate(pairs) if mask >> i & 1]


def graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [p for i, p in enumerate(pairs) if mask >> i & 1]


def acyclic(n, edges):
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for a, b in edges:
        indeg[b] += 1
        out[a].append(b)
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == n


def components(n, edges):
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(v) for v in range(n)})


def write(name, header, rows):
    with open(HERE / name, "w") as f:
        f.write(header + "\n")
        for r in rows:
            f.write(",".join(str(x) for x in r) + "\n")


def main():
    dag = {n: 0 for n in range(6)}
    dag_edges = {}
    for n in range(6):
        for e in digraphs(n):
            if acyclic(n, e):
                dag[n] += 1
                if n <= 4:
                    dag_edges[(n, len(e))] = dag_edges.get((n, len(e)), 0) + 1
    write("dag.csv", "n,count", sorted(dag.items()))
    write("a081064.csv", "n,edges,count",
          [(n, d, dag_edges.get((n, d), 0)) for n in range(1, 5) for d in range(n * (n - 1) + 1)])

    conn = {}
    conn_edges = {}
    isolated_free_forests = {}
    for n in range(1, 7):
        for e in graphs(n):
            c = components(n, e)
            if c == 1:
                conn[n] = conn.get(n, 0) + 1
                if n <= 5:
                    conn_edges[(n, len(e))] = conn_edges.get((n, len(e)), 0) + 1
            if n <= 5 and len(e) + c == n:
                touched = {v for p in e for v in p}
                if len(touched) == n:
                    isolated_free_forests[n] = isolated_free_forests.get(n, 0) + 1
    write("connected.csv", "n,count", sorted(conn.items()))
    write("a062734.csv", "n,edges,count",
          [(n, d, conn_edges.get((n, d), 0)) for n in range(1, 6) for d in range(comb(n, 2) + 1)])
    write("a105784.csv", "n,count", [(n, isolated_free_forests.get(n, 0)) for n in range(1, 6)])

    def cayley(m):
        return 1 if m <= 2 else m ** (m - 2)

    forest = [1]
    for n in range(1, 11):
        forest.append(sum(comb(n - 1, m - 1) * cayley(m) * forest[n - m] for m in range(1, n + 1)))
    write("forest.csv", "n,count", list(enumerate(forest)))
    write("trees.csv", "n,count", [(n, cayley(n)) for n in range(1, 13)])


if __name__ == "__main__":
    main()
