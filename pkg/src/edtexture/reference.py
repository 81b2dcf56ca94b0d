"""Naive reference implementations used as testing oracles.

Everything here is written as literal double loops over pixels, straight
from the definitions, deliberately ignoring performance. The vectorized
implementations in descriptors.py must agree with these; keep the two
sides independent.
"""

import math

from .descriptors import GLCM_DISPLACEMENTS, GLDM_DISPLACEMENTS, NEIGHBOR_OFFSETS


def lbp_code_at(img, r, c):
    """Pattern code of one interior pixel by direct comparison."""
    center = int(img[r][c])
    code = 0
    for k, (dr, dc) in enumerate(NEIGHBOR_OFFSETS):
        if int(img[r + dr][c + dc]) >= center:
            code |= 1 << k
    return code


def lbp_histogram(img):
    """256-bin normalized LBP histogram, per-pixel loop."""
    h, w = img.shape
    hist = [0] * 256
    for r in range(1, h - 1):
        for c in range(1, w - 1):
            hist[lbp_code_at(img, r, c)] += 1
    n = (h - 2) * (w - 2)
    return [v / n for v in hist]


def riu2_bin(code):
    """Transition count on the circular bit string, then popcount or 9."""
    bits = format(code, "08b")
    transitions = sum(bits[i] != bits[(i + 1) % 8] for i in range(8))
    return bits.count("1") if transitions <= 2 else 9


def lbpv_accumulate(img):
    """Raw (unnormalized) variance-weighted riu2 accumulation."""
    h, w = img.shape
    bins = [0.0] * 10
    for r in range(1, h - 1):
        for c in range(1, w - 1):
            neighbors = [float(img[r + dr][c + dc]) for dr, dc in NEIGHBOR_OFFSETS]
            mu = sum(neighbors) / 8.0
            var = sum((g - mu) ** 2 for g in neighbors) / 8.0
            bins[riu2_bin(lbp_code_at(img, r, c))] += var
    return bins


def lbpv_histogram(img):
    bins = lbpv_accumulate(img)
    total = sum(bins)
    if total <= 0:
        return [0.0] * 10
    return [v / total for v in bins]


def glcm_matrix(img, dx, dy, levels=32):
    """Symmetrized normalized co-occurrence matrix by pair enumeration."""
    h, w = img.shape
    counts = [[0] * levels for _ in range(levels)]
    total = 0
    for r in range(h):
        for c in range(w):
            r2, c2 = r + dy, c + dx
            if 0 <= r2 < h and 0 <= c2 < w:
                a = int(img[r][c]) * levels // 256
                b = int(img[r2][c2]) * levels // 256
                counts[a][b] += 1
                counts[b][a] += 1  # symmetrize
                total += 2
    return [[v / total for v in row] for row in counts]


def glcm_stats(p):
    levels = len(p)
    contrast = sum((a - b) ** 2 * p[a][b] for a in range(levels) for b in range(levels))
    energy = sum(p[a][b] ** 2 for a in range(levels) for b in range(levels))
    homogeneity = sum(
        p[a][b] / (1 + abs(a - b)) for a in range(levels) for b in range(levels)
    )
    pr = [sum(row) for row in p]
    pc = [sum(p[a][b] for a in range(levels)) for b in range(levels)]
    mu_r = sum(a * pr[a] for a in range(levels))
    mu_c = sum(b * pc[b] for b in range(levels))
    var_r = sum((a - mu_r) ** 2 * pr[a] for a in range(levels))
    var_c = sum((b - mu_c) ** 2 * pc[b] for b in range(levels))
    denom = math.sqrt(var_r) * math.sqrt(var_c)
    if denom > 0:
        correlation = (
            sum(
                (a - mu_r) * (b - mu_c) * p[a][b]
                for a in range(levels)
                for b in range(levels)
            )
            / denom
        )
    else:
        correlation = 0.0
    return [contrast, correlation, energy, homogeneity]


def glcm_features(img, levels=32):
    out = []
    for dx, dy in GLCM_DISPLACEMENTS:
        out.extend(glcm_stats(glcm_matrix(img, dx, dy, levels)))
    return out


def gldm_features(img):
    h, w = img.shape
    out = []
    for dx, dy in GLDM_DISPLACEMENTS:
        hist = [0] * 256
        total = 0
        for r in range(h - dy):
            for c in range(w - dx):
                hist[abs(int(img[r][c]) - int(img[r + dy][c + dx]))] += 1
                total += 1
        p = [v / total for v in hist]
        mean = sum(g * p[g] for g in range(256))
        contrast = sum(g * g * p[g] for g in range(256))
        asm = sum(v * v for v in p)
        entropy = -sum(v * math.log(v) for v in p if v > 0)
        out.extend([mean, contrast, asm, entropy])
    return out


def nearest_neighbor_label(train, train_labels, query):
    """Exhaustive scan with math.dist; lowest index wins ties."""
    best_idx = 0
    best_dist = math.dist(tuple(train[0]), tuple(query))
    for i in range(1, len(train)):
        d = math.dist(tuple(train[i]), tuple(query))
        if d < best_dist:
            best_idx, best_dist = i, d
    return int(train_labels[best_idx])


def gaussian_log_posterior(query, means, variances, log_priors):
    """Per-class log posterior, scalar loops over features."""
    out = []
    for c in range(len(log_priors)):
        ll = log_priors[c]
        for f in range(len(query)):
            v = variances[c][f]
            ll += -0.5 * math.log(2.0 * math.pi * v)
            ll += -0.5 * (query[f] - means[c][f]) ** 2 / v
        out.append(ll)
    return out
