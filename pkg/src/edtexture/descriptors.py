"""Texture feature vectors from 2-D uint8 images.

Six descriptors with fixed output lengths:

    lbp      256   local binary pattern histogram (8 neighbors, radius 1)
    lbpv     10    rotation-invariant uniform LBP weighted by local variance
    glcm     48    co-occurrence contrast/correlation/energy/homogeneity,
                   12 displacement classes
    gldm     12    absolute gray-level difference mean/contrast/ASM/entropy,
                   displacements (1,1) (2,2) (5,5)
    fourier  32    spectral energy over 4 cumulative disks x 7 wedges + 4 disks
    gabor    40    mean response energy of an 8-scale x 5-orientation bank

All outputs are 1-D float64 arrays with no NaN/Inf for any valid input.
"""

import math
from dataclasses import dataclass

import numpy as np

FEATURE_LENGTHS = {
    "lbp": 256,
    "lbpv": 10,
    "glcm": 48,
    "gldm": 12,
    "fourier": 32,
    "gabor": 40,
}

# 8-neighborhood enumerated counter-clockwise starting east, in (row, col)
# offsets with the y axis pointing down: E NE N NW W SW S SE.
NEIGHBOR_OFFSETS = [
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
    (1, 0),
    (1, 1),
]

# GLCM displacement classes: {0,+-1,+-2}^2 minus (0,0), deduplicated under
# point reflection; canonical representative has dx > 0 or (dx = 0, dy > 0),
# sorted lexicographically. dx moves columns, dy moves rows.
GLCM_DISPLACEMENTS = [
    (0, 1),
    (0, 2),
    (1, -2),
    (1, -1),
    (1, 0),
    (1, 1),
    (1, 2),
    (2, -2),
    (2, -1),
    (2, 0),
    (2, 1),
    (2, 2),
]

GLDM_DISPLACEMENTS = [(1, 1), (2, 2), (5, 5)]

FOURIER_RINGS = 4
FOURIER_WEDGES = 7


def riu2_map(code):
    """Rotation-invariant uniform bin of an 8-bit pattern.

    Patterns with at most two circular 0/1 transitions map to their number
    of set bits (0..8); all other patterns share bin 9.
    """
    if not 0 <= code <= 255:
        raise ValueError(f"code {code} outside [0, 255]")
    bits = [(code >> k) & 1 for k in range(8)]
    transitions = sum(bits[k] != bits[(k + 1) % 8] for k in range(8))
    return sum(bits) if transitions <= 2 else 9


_RIU2_LUT = np.array([riu2_map(c) for c in range(256)], dtype=np.int64)


def _check_min_size(img, min_h, min_w, name):
    if img.shape[0] < min_h or img.shape[1] < min_w:
        raise ValueError(
            f"{name} needs an image of at least {min_h}x{min_w}, "
            f"got {img.shape[0]}x{img.shape[1]}"
        )


def _neighbor_views(img):
    """The 8 shifted views aligned with the interior region, CCW from east."""
    h, w = img.shape
    return [img[1 + dr : h - 1 + dr, 1 + dc : w - 1 + dc] for dr, dc in NEIGHBOR_OFFSETS]


def _lbp_codes(img):
    """Pattern code per interior pixel: bit k set iff neighbor_k >= center."""
    center = img[1:-1, 1:-1]
    codes = np.zeros(center.shape, dtype=np.int64)
    for k, nb in enumerate(_neighbor_views(img)):
        codes += (nb >= center).astype(np.int64) << k
    return codes


def lbp(img):
    """256-bin LBP histogram over interior pixels, normalized to sum 1."""
    img = np.asarray(img)
    _check_min_size(img, 3, 3, "lbp")
    codes = _lbp_codes(img)
    hist = np.bincount(codes.ravel(), minlength=256).astype(np.float64)
    return hist / codes.size


def lbpv(img):
    """10-bin riu2 histogram weighted by local neighbor variance.

    Each interior pixel contributes the population variance of its 8
    neighbors to the riu2 bin of its pattern; the vector is normalized by
    the total accumulated variance (all zeros if the total is 0).
    """
    img = np.asarray(img)
    _check_min_size(img, 3, 3, "lbpv")
    bins = _RIU2_LUT[_lbp_codes(img)]

    views = _neighbor_views(img)
    s1 = np.zeros(bins.shape, dtype=np.int64)
    s2 = np.zeros(bins.shape, dtype=np.int64)
    for nb in views:
        v = nb.astype(np.int64)
        s1 += v
        s2 += v * v
    mean = s1 / 8.0
    var = s2 / 8.0 - mean * mean

    out = np.bincount(bins.ravel(), weights=var.ravel(), minlength=10)
    total = out.sum()
    return out / total if total > 0 else np.zeros(10)


def _glcm_matrix(quantized, dx, dy, levels):
    """Symmetrized, normalized co-occurrence matrix for one displacement."""
    h, w = quantized.shape
    y0, y1 = max(0, -dy), h - max(0, dy)
    x0, x1 = max(0, -dx), w - max(0, dx)
    a = quantized[y0:y1, x0:x1].ravel()
    b = quantized[y0 + dy : y1 + dy, x0 + dx : x1 + dx].ravel()
    counts = np.bincount(a * levels + b, minlength=levels * levels)
    counts = counts.reshape(levels, levels).astype(np.float64)
    counts = counts + counts.T
    return counts / counts.sum()


def _glcm_stats(p):
    """[contrast, correlation, energy, homogeneity] of a normalized matrix."""
    levels = p.shape[0]
    idx = np.arange(levels, dtype=np.float64)
    a = idx[:, None]
    b = idx[None, :]

    contrast = float(((a - b) ** 2 * p).sum())
    energy = float((p * p).sum())
    homogeneity = float((p / (1.0 + np.abs(a - b))).sum())

    pr = p.sum(axis=1)
    pc = p.sum(axis=0)
    mu_r = float((idx * pr).sum())
    mu_c = float((idx * pc).sum())
    var_r = float(((idx - mu_r) ** 2 * pr).sum())
    var_c = float(((idx - mu_c) ** 2 * pc).sum())
    denom = math.sqrt(var_r) * math.sqrt(var_c)
    if denom > 0:
        correlation = float(((a - mu_r) * (b - mu_c) * p).sum() / denom)
    else:
        correlation = 0.0  # constant image: degenerate marginals
    return [contrast, correlation, energy, homogeneity]


def glcm_features(img, levels=32):
    """48 co-occurrence features: 12 displacement classes x 4 statistics.

    Intensities are quantized to ``levels`` gray levels (floor(v*levels/256))
    before counting; matrices are symmetrized and normalized.
    """
    img = np.asarray(img)
    _check_min_size(img, 3, 3, "glcm_features")
    if not 1 <= levels <= 256:
        raise ValueError(f"levels {levels} outside [1, 256]")
    quantized = (img.astype(np.int64) * levels) // 256
    out = []
    for dx, dy in GLCM_DISPLACEMENTS:
        out.extend(_glcm_stats(_glcm_matrix(quantized, dx, dy, levels)))
    return np.array(out, dtype=np.float64)


def gldm_features(img):
    """12 gray-level difference features: 3 displacements x 4 statistics.

    Per displacement, the normalized histogram p of absolute differences
    |f(x,y) - f(x+dx, y+dy)| yields [mean, contrast, ASM, entropy].
    """
    img = np.asarray(img)
    _check_min_size(img, 6, 6, "gldm_features")
    g = np.arange(256, dtype=np.float64)
    out = []
    for dx, dy in GLDM_DISPLACEMENTS:
        a = img[: img.shape[0] - dy, : img.shape[1] - dx].astype(np.int64)
        b = img[dy:, dx:].astype(np.int64)
        diff = np.abs(a - b)
        hist = np.bincount(diff.ravel(), minlength=256).astype(np.float64)
        p = hist / hist.sum()
        mean = float((g * p).sum())
        contrast = float((g * g * p).sum())
        asm = float((p * p).sum())
        pos = p[p > 0]
        entropy = float(-(pos * np.log(pos)).sum()) + 0.0  # avoid -0.0
        out.extend([mean, contrast, asm, entropy])
    return np.array(out, dtype=np.float64)


def fourier_features(img):
    """32 spectral energies: 28 disk-sector values (radius-major) + 4 disks.

    The centered power spectrum (mean retained) is partitioned about its
    center with max radius R = min(width, height)/2, disk boundaries at
    (i/4)R and 7 equal wedges of [0, 2pi); each value is the power inside
    the region divided by the total spectral power. An identically zero
    image yields the zero vector.
    """
    img = np.asarray(img)
    h, w = img.shape
    spectrum = np.fft.fftshift(np.fft.fft2(img.astype(np.float64)))
    power = (spectrum.real**2 + spectrum.imag**2)
    total = power.sum()
    if total == 0.0:
        return np.zeros(32)

    cy, cx = h // 2, w // 2
    dy = np.arange(h, dtype=np.float64)[:, None] - cy
    dx = np.arange(w, dtype=np.float64)[None, :] - cx
    rsq = dx * dx + dy * dy

    radius = min(w, h) / 2.0
    boundaries = np.array([(i * radius / 4.0) ** 2 for i in range(1, 5)])
    # smallest disk containing each sample; 4 = outside the largest disk
    ring = np.searchsorted(boundaries, rsq.ravel(), side="left")

    angle = np.arctan2(dy, dx)
    angle = np.where(angle < 0, angle + 2.0 * np.pi, angle)
    wedge = np.minimum(
        (angle.ravel() * (FOURIER_WEDGES / (2.0 * np.pi))).astype(np.int64),
        FOURIER_WEDGES - 1,
    )

    inside = ring < FOURIER_RINGS
    flat_bin = ring[inside] * FOURIER_WEDGES + wedge[inside]
    sector = np.bincount(
        flat_bin, weights=power.ravel()[inside], minlength=FOURIER_RINGS * FOURIER_WEDGES
    ).reshape(FOURIER_RINGS, FOURIER_WEDGES)

    e_a = np.cumsum(sector, axis=0)  # cumulative disks, wedge-resolved
    disk_power = np.bincount(ring[inside], weights=power.ravel()[inside], minlength=4)
    e_b = np.cumsum(disk_power)

    return np.concatenate([e_a.ravel(), e_b]) / total


@dataclass
class GaborBank:
    """Immutable bank of complex Gabor kernels, scale-major.

    kernels has shape (scales, orientations, side, side); every kernel is
    DC-corrected (zero complex mean), so constant images produce zero
    response up to float roundoff.
    """

    kernels: np.ndarray
    frequencies: np.ndarray
    orientations: np.ndarray
    kernel_side: int

    @property
    def n_filters(self):
        return self.kernels.shape[0] * self.kernels.shape[1]


def gabor_bank(scales=8, orientations=5, kernel_side=31, u_low=0.05, u_high=0.4):
    """Build the filter bank: ``scales`` center frequencies geometrically
    spaced in [u_low, u_high] cycles/pixel, orientations k*pi/n.

    Gaussian envelopes are chosen so the half-magnitude ellipses of
    neighboring filters touch in the frequency plane, radially between
    adjacent scales and tangentially between adjacent orientations.
    """
    if kernel_side < 11 or kernel_side % 2 == 0:
        raise ValueError(f"kernel_side must be odd and >= 11, got {kernel_side}")
    if scales < 2 or orientations < 1:
        raise ValueError("need at least 2 scales and 1 orientation")

    ratio = (u_high / u_low) ** (1.0 / (scales - 1))
    freqs = u_low * ratio ** np.arange(scales)
    thetas = np.arange(orientations) * np.pi / orientations
    half_mag = math.sqrt(2.0 * math.log(2.0))

    half = kernel_side // 2
    y, x = np.mgrid[-half : half + 1, -half : half + 1].astype(np.float64)

    kernels = np.empty((scales, orientations, kernel_side, kernel_side), dtype=np.complex128)
    for s, u in enumerate(freqs):
        # radial/tangential frequency-domain stds from the tangency constraints
        sigma_u = (ratio - 1.0) * u / ((ratio + 1.0) * half_mag)
        sigma_v = (
            math.tan(np.pi / (2.0 * orientations))
            * math.sqrt(u * u - (half_mag * sigma_u) ** 2)
            / half_mag
        )
        sigma_x = 1.0 / (2.0 * np.pi * sigma_u)
        sigma_y = 1.0 / (2.0 * np.pi * sigma_v)
        for o, theta in enumerate(thetas):
            xr = x * math.cos(theta) + y * math.sin(theta)
            yr = -x * math.sin(theta) + y * math.cos(theta)
            envelope = np.exp(-0.5 * ((xr / sigma_x) ** 2 + (yr / sigma_y) ** 2))
            envelope /= 2.0 * np.pi * sigma_x * sigma_y
            kernel = envelope * np.exp(2j * np.pi * u * xr)
            kernels[s, o] = kernel - kernel.mean()
    return GaborBank(
        kernels=kernels,
        frequencies=freqs,
        orientations=thetas,
        kernel_side=kernel_side,
    )


def _convolve_same_reflect(img, kernel):
    """FFT convolution with reflect padding, output the size of ``img``."""
    half = kernel.shape[0] // 2
    padded = np.pad(img, half, mode="reflect")
    fh = padded.shape[0] + kernel.shape[0] - 1
    fw = padded.shape[1] + kernel.shape[1] - 1
    spec = np.fft.fft2(padded, (fh, fw)) * np.fft.fft2(kernel, (fh, fw))
    full = np.fft.ifft2(spec)
    return full[2 * half : 2 * half + img.shape[0], 2 * half : 2 * half + img.shape[1]]


def gabor_features(img, bank=None):
    """40 response energies (mean squared complex magnitude), scale-major."""
    img = np.asarray(img)
    if bank is None:
        bank = default_gabor_bank()
    side = bank.kernel_side
    if img.shape[0] < side or img.shape[1] < side:
        raise ValueError(
            f"gabor_features needs an image of at least {side}x{side}, "
            f"got {img.shape[0]}x{img.shape[1]}"
        )
    x = img.astype(np.float64)
    out = np.empty(bank.n_filters)
    i = 0
    for s in range(bank.kernels.shape[0]):
        for o in range(bank.kernels.shape[1]):
            resp = _convolve_same_reflect(x, bank.kernels[s, o])
            out[i] = np.mean(resp.real**2 + resp.imag**2)
            i += 1
    return out


_DEFAULT_BANK = None


def default_gabor_bank():
    """The shared default bank (built once; immutable thereafter)."""
    global _DEFAULT_BANK
    if _DEFAULT_BANK is None:
        _DEFAULT_BANK = gabor_bank()
    return _DEFAULT_BANK
