"""Independent reference values for the text-metric unit tests.

Step-by-step CIDEr-D / BLEU-4 and FNV-1a bucket arithmetic, written without
looking at the C++ implementation. Run: python3 tests/oracles/text_oracle.py
"""
import math
import re
from collections import Counter


def tok(s):
    return re.findall(r"[a-z0-9]+", s.lower())


def ngrams(t, n):
    return Counter(" ".join(t[i:i + n]) for i in range(len(t) - n + 1))


def cider_d(preds, refs, sigma=6.0):
    N = len(refs)
    df = Counter()
    for r in refs:
        seen = set()
        for n in range(1, 5):
            seen |= set(ngrams(tok(r), n))
        df.update(seen)
    out = []
    for p, r in zip(preds, refs):
        tp, tr = tok(p), tok(r)
        acc = 0.0
        for n in range(1, 5):
            hp, hr = ngrams(tp, n), ngrams(tr, n)
            vp = {g: c * (math.log(N) - math.log(max(1, df[g]))) for g, c in hp.items()}
            vr = {g: c * (math.log(N) - math.log(max(1, df[g]))) for g, c in hr.items()}
            np_ = math.sqrt(sum(v * v for v in vp.values()))
            nr = math.sqrt(sum(v * v for v in vr.values()))
            dot = sum(min(vp[g], vr[g]) * vr[g] for g in vp if g in vr)
            val = dot / (np_ * nr) if np_ > 0 and nr > 0 else 0.0
            delta = len(tp) - len(tr)
            acc += val * math.exp(-delta * delta / (2 * sigma * sigma))
        out.append(acc / 4 * 10)
    return sum(out) / len(out), out


def bleu4(preds, refs):
    m = [0] * 4
    t = [0] * 4
    c = r = 0
    for p, q in zip(preds, refs):
        tp, tq = tok(p), tok(q)
        c += len(tp)
        r += len(tq)
        for n in range(1, 5):
            hp, hq = ngrams(tp, n), ngrams(tq, n)
            t[n - 1] += sum(hp.values())
            m[n - 1] += sum(min(v, hq[g]) for g, v in hp.items())
    if min(m) == 0:
        return 0.0
    bp = math.exp(1 - r / c) if c < r else 1.0
    return bp * math.exp(sum(math.log(a / b) for a, b in zip(m, t)) / 4)


def fnv1a(s):
    h = 14695981039346656037
    for b in s.encode():
        h ^= b
        h = (h * 1099511628211) % (1 << 64)
    return h


if __name__ == "__main__":
    preds = ["the cat sat on the mat", "a dog runs fast"]
    refs = ["the cat is on the mat", "the dog runs very fast"]
    mean, per = cider_d(preds, refs)
    print("cider_d mixed mean %.12f per %r" % (mean, per))
    print("bleu4 mixed %.12f" % bleu4(preds, refs))
    print("bleu4 abcd %.12f" % bleu4(["a b c d"], ["a b c d e"]))
    print("cider identical disjoint %.12f" % cider_d(["x y z w", "p q r s"], ["x y z w", "p q r s"])[0])
    for w in ["a", "b", "whisk", "eggs", "fold", "flour"]:
        print("bucket", w, fnv1a(w) % 256)
