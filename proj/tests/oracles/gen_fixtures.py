"""Independent reference values for the unit and acceptance tests.

Every fixture here is computed directly from the defining formula with the
Python standard library, numpy or scipy; nothing imports the C++ code.
Outputs are checked in under tests/fixtures and regenerated only on purpose.

    python3 tests/oracles/gen_fixtures.py tests/fixtures
"""
import json
import math
import random
import re
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import numpy as np
from scipy import stats

OUT = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures")
MASK = (1 << 64) - 1


def dump(name, obj):
    (OUT / name).write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n", encoding="utf-8")


# --------------------------------------------------------------------------
# XML paragraph extraction: ElementTree itertext over every <p>.

WORDS = ("virus coronavirus light mask vaccine study hospital patient doctor "
         "city health risk data report week test spread").split()


def xml_fixtures(rng):
    d = OUT / "xml"
    d.mkdir(exist_ok=True)
    expected = {}
    for i in range(50):
        parts = ['<?xml version="1.0" encoding="UTF-8"?>', "<doc>", "<title>Title %d</title>" % i]
        if i % 4 == 0:
            parts.append("<script>var x = '<p>not text</p>';</script>".replace("<p>", "&lt;p&gt;").replace("</p>", "&lt;/p&gt;"))
        if i % 5 == 0:
            parts.append("<!-- a comment <p>hidden</p> -->")
        for k in range(1 + rng.randrange(5)):
            words = [rng.choice(WORDS) for _ in range(3 + rng.randrange(10))]
            pieces = []
            for w in words:
                r = rng.random()
                if r < 0.1:
                    pieces.append("<b>%s</b>" % w)
                elif r < 0.15:
                    pieces.append("%s &amp; co" % w)
                elif r < 0.2:
                    pieces.append("&lt;%s&gt;" % w)
                elif r < 0.23:
                    pieces.append("caf&#233;")
                elif r < 0.26:
                    pieces.append("&#x41;%s" % w)
                elif r < 0.3:
                    pieces.append("%s\n  " % w)
                else:
                    pieces.append(w)
            attr = ' class="c%d"' % k if rng.random() < 0.3 else ""
            parts.append("<p%s>%s.</p>" % (attr, " ".join(pieces)))
            if rng.random() < 0.2:
                parts.append("<p>   </p>")
            if rng.random() < 0.2:
                parts.append("<div><p>Nested %s paragraph.</p></div>" % rng.choice(WORDS))
        parts.append("</doc>")
        raw = "\n".join(parts) + "\n"
        name = "doc_%02d.xml" % i
        (d / name).write_text(raw, encoding="utf-8")
        root = ET.fromstring(raw.encode("utf-8"))
        paras = []
        for p in root.iter("p"):
            text = " ".join("".join(p.itertext()).split())
            if text:
                paras.append(text)
        expected[name] = paras
    dump("xml_expected.json", expected)


# --------------------------------------------------------------------------
# BM25: 20 docs x 5 queries, direct formula per (query, doc).

def bm25_fixture(rng):
    vocab = ["t%d" % i for i in range(30)]
    docs = []
    for i in range(20):
        n = 5 + rng.randrange(40)
        docs.append({"doc_id": "d%02d" % i, "tokens": [rng.choice(vocab[: 5 + i]) for _ in range(n)]})
    queries = [[rng.choice(vocab) for _ in range(1 + rng.randrange(4))] for _ in range(5)]
    queries[0] = ["t0", "t0", "t3"]  # repeated query term
    queries[4] = ["t29", "t1"]       # one term absent from the corpus
    N = len(docs)
    avgdl = sum(len(d["tokens"]) for d in docs) / N
    k1, b = 1.2, 0.75
    scores = []
    for q in queries:
        row = []
        for d in docs:
            dl = len(d["tokens"])
            s = 0.0
            for t in q:
                f = d["tokens"].count(t)
                if f == 0:
                    continue
                df = sum(1 for e in docs if t in e["tokens"])
                idf = math.log(1 + (N - df + 0.5) / (df + 0.5))
                s += idf * f * (k1 + 1) / (f + k1 * (1 - b + b * dl / avgdl))
            row.append(s)
        scores.append(row)
    dump("bm25_small.json", {"docs": docs, "queries": queries, "scores": scores, "k1": k1, "b": b})


# --------------------------------------------------------------------------
# Metrics with trec_eval semantics (gain 2^g - 1 for NDCG). Scores strictly
# decrease with rank so score order and rank order coincide.

def ref_metrics(ranked, qrel):
    rels = {d: g for d, g in qrel.items() if g > 0}
    R = len(rels)

    def prec(k):
        return sum(1 for d in ranked[:k] if d in rels) / k

    hits, ap = 0, 0.0
    for i, d in enumerate(ranked, 1):
        if d in rels:
            hits += 1
            ap += hits / i
    ap = ap / R if R else 0.0

    def dcg(grades, k):
        return sum((2 ** g - 1) / math.log2(i + 2) for i, g in enumerate(grades[:k]))

    ideal = sorted(rels.values(), reverse=True)

    def ndcg(k):
        run_g = [qrel.get(d, 0) for d in ranked]
        kk = len(run_g) if k is None else k
        ik = len(ideal) if k is None else k
        idcg = dcg(ideal, ik)
        return dcg(run_g, kk) / idcg if idcg > 0 else 0.0

    rprec = (sum(1 for d in ranked[:R] if d in rels) / R) if R else 0.0
    recall = (sum(1 for d in ranked if d in rels) / R) if R else 0.0
    return {"P5": prec(5), "P10": prec(10), "MAP": ap, "NDCG10": ndcg(10), "NDCG": ndcg(None),
            "Rprec": rprec, "Recall": recall}


def metrics_random(rng):
    qrels_lines, run_lines, expected = [], [], {}
    for q in range(100):
        qid = "q%03d" % q
        pool = ["doc%03d" % i for i in range(60)]
        rng.shuffle(pool)
        judged = pool[: 10 + rng.randrange(30)]
        qrel = {}
        for d in judged:
            qrel[d] = rng.choice([0, 0, 0, 1, 1, 2])
        if q % 17 == 0:
            qrel = {d: 0 for d in judged}  # no relevant docs: excluded from the means
        for d in sorted(qrel):
            qrels_lines.append("%s 0 %s %d" % (qid, d, qrel[d]))
        depth = 0 if q == 5 else 1 + rng.randrange(40)  # q005: judged but missing from run
        ranked = pool[:depth] if rng.random() < 0.5 else rng.sample(pool, depth)
        score = 100.0
        for r, d in enumerate(ranked, 1):
            score -= 0.25 + rng.randrange(8) * 0.125
            run_lines.append("%s Q0 %s %d %.6f ref" % (qid, d, r, score))
        if any(g > 0 for g in qrel.values()):
            expected[qid] = ref_metrics(ranked, qrel)
    (OUT / "metrics_random.qrels").write_text("\n".join(qrels_lines) + "\n")
    (OUT / "metrics_random.run").write_text("\n".join(run_lines) + "\n")
    means = {m: sum(v[m] for v in expected.values()) / len(expected) for m in next(iter(expected.values()))}
    dump("metrics_random_expected.json", {"per_query": expected, "mean": means})


# --------------------------------------------------------------------------
# Paired t-test (scipy.stats.ttest_rel).

def ttest_fixture(rng):
    a = [round(rng.uniform(0.2, 0.9), 4) for _ in range(30)]
    b = [round(x + rng.gauss(0.03, 0.08), 4) for x in a]
    res = stats.ttest_rel(b, a)
    dump("ttest_30.json", {"a": a, "b": b, "t": float(res.statistic), "p": float(res.pvalue), "df": 29})


# --------------------------------------------------------------------------
# wCombSUM over 20 docs, alpha 0.5, beta 0.4.

def wcombsum_fixture(rng):
    docs = ["w%02d" % i for i in range(20)]
    bm25 = {d: round(rng.uniform(3, 25), 6) for d in docs}
    bi = {d: round(rng.uniform(-0.2, 0.9), 6) for d in docs}
    cross = {d: round(rng.uniform(0, 1), 6) for d in docs}
    bi["w07"] = float("-inf")
    extra_bm25 = {"x%02d" % i: round(rng.uniform(0, 2), 6) for i in range(5)}  # not re-ranked

    def norm(m):
        finite = [v for v in m.values() if math.isfinite(v)]
        lo = min(finite)
        vals = {d: (v if math.isfinite(v) else lo) for d, v in m.items()}
        lo, hi = min(vals.values()), max(vals.values())
        return {d: (1.0 if hi == lo else (v - lo) / (hi - lo)) for d, v in vals.items()}

    nb, nbi, nc = norm(bm25), norm(bi), norm(cross)
    alpha, beta = 0.5, 0.4
    gamma = 1 - alpha - beta
    fused = {d: alpha * nc[d] + beta * nbi[d] + gamma * nb[d] for d in docs}
    dump("wcombsum_20.json", {
        "bm25": {**bm25, **extra_bm25}, "bi": {d: (v if math.isfinite(v) else "-inf") for d, v in bi.items()},
        "cross": cross, "alpha": alpha, "beta": beta, "fused": fused})


# --------------------------------------------------------------------------
# Jaccard over lowercased word-token sets.

def jaccard_fixture():
    pairs = [
        ("Is uv light effective to kill coronavirus?", "UV light kills the coronavirus."),
        ("face masks prevent transmission", "Masks prevent transmission of the virus, studies say."),
        ("vitamin d covid risk", "Vitamin D and COVID risk: a review."),
        ("hand sanitizer", "Wash your hands with soap."),
        ("loss of smell", "Loss of smell, loss of taste."),
        ("a b c d", "c d e f"),
        ("same words here", "here words same"),
        ("Nothing shared", "entirely different"),
        ("COVID-19 vaccine 2021", "covid 19 vaccine rollout in 2021"),
        ("", ""),
    ]
    tok = re.compile(r"[a-z0-9]+")
    out = []
    for a, b in pairs:
        sa, sb = set(tok.findall(a.lower())), set(tok.findall(b.lower()))
        j = 0.0 if not sa and not sb else len(sa & sb) / len(sa | sb)
        out.append({"a": a, "b": b, "jaccard": j})
    dump("jaccard_pairs.json", out)


# --------------------------------------------------------------------------
# Hashing embedder recomputed from its definition.

def fnv1a64(data, basis=0xcbf29ce484222325):
    h = basis
    for byte in data:
        h ^= byte
        h = (h * 0x100000001b3) & MASK
    return h


def splitmix64(x):
    x = (x + 0x9E3779B97F4A7C15) & MASK
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def hashing_vec(text, dim=64, seed=42):
    v = [0.0] * dim
    for t in re.findall(r"[a-z0-9]+", text.lower()):
        h = splitmix64(fnv1a64(t.encode()) ^ seed)
        v[h % dim] += -1.0 if (h >> 32) & 1 else 1.0
    if not any(v):
        v[splitmix64(fnv1a64(text.encode()) ^ seed) % dim] = 1.0
    return v


def hashing_fixture():
    texts = ["virus", "The virus spreads", "uv light kills coronavirus", "???", "virus virus"]
    dump("hashing_vectors.json", {"dim": 64, "seed": 42, "vectors": {t: hashing_vec(t) for t in texts}})
    u, v = np.array([1.0, 2.0, 3.0]), np.array([4.0, 5.0, 6.0])
    dump("cosine.json", {"u": u.tolist(), "v": v.tolist(),
                         "cosine": float(u @ v / (np.linalg.norm(u) * np.linalg.norm(v)))})


# --------------------------------------------------------------------------
# aggregate_topk: sort descending, take 3, dot with w (left to right).

def aggregate_fixture(rng):
    w = [0.5, 0.3, 0.2]
    cases = []
    for _ in range(100):
        s = [rng.uniform(-1, 1) for _ in range(1 + rng.randrange(12))]
        top = sorted(s, reverse=True)[:3]
        total = 0.0
        for wi, si in zip(w, top):
            total += wi * si
        cases.append({"scores": s, "expected": total})
    dump("aggregate_100.json", {"weights": w, "cases": cases})


# --------------------------------------------------------------------------
# 1,000-row run file for the round-trip harness.

def run_roundtrip(rng):
    lines = []
    for q in range(20):
        qid = str(101 + q)
        docs = rng.sample(range(100000), 50)
        score = rng.uniform(10, 30)
        for r, d in enumerate(docs, 1):
            lines.append("%s Q0 D%06d %d %.6f roundtrip" % (qid, d, r, score))
            score -= rng.uniform(0, 0.4)
    (OUT / "run_1000.txt").write_text("\n".join(lines) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rng = random.Random(7)
    xml_fixtures(rng)
    bm25_fixture(rng)
    metrics_random(rng)
    ttest_fixture(rng)
    wcombsum_fixture(rng)
    jaccard_fixture()
    hashing_fixture()
    aggregate_fixture(rng)
    run_roundtrip(rng)


if __name__ == "__main__":
    main()
