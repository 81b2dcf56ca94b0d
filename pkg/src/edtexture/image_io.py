"""Image and dataset loading.

Grayscale images are plain 2-D uint8 numpy arrays throughout the package.
Supported on-disk formats are binary PGM (P5, maxval <= 255) and 8-bit PNG
(grayscale or RGB); RGB input is converted with fixed BT.601 weights so
results are reproducible across machines.
"""

import os
import warnings
from dataclasses import dataclass

import numpy as np
from PIL import Image

# BT.601 luma weights, round-half-up. Fixed by convention, not configurable:
# changing them silently changes every downstream descriptor.
_R_WEIGHT = 0.299
_G_WEIGHT = 0.587
_B_WEIGHT = 0.114

_IMAGE_EXTENSIONS = (".pgm", ".png")


class ImageFormatError(ValueError):
    """Raised when a file cannot be decoded as a supported image."""


@dataclass
class LabeledDataset:
    """Images plus dense 0-based class labels.

    Attributes
    ----------
    images : list of np.ndarray
        2-D uint8 arrays, one per sample.
    labels : np.ndarray
        int array, labels[i] is the class index of images[i].
    class_names : list of str
        class_names[c] is the directory name of class c.
    """

    images: list
    labels: np.ndarray
    class_names: list

    def __post_init__(self):
        self.labels = np.asarray(self.labels, dtype=np.int64)
        if len(self.images) != len(self.labels):
            raise ValueError("images and labels length mismatch")
        if len(self.labels) and self.labels.max() >= len(self.class_names):
            raise ValueError("label index out of range of class_names")

    def __len__(self):
        return len(self.images)

    def class_counts(self):
        return np.bincount(self.labels, minlength=len(self.class_names))


def to_grayscale(r, g, b):
    """Convert one RGB triple (each in [0, 255]) to a luma intensity.

    Uses round(0.299 r + 0.587 g + 0.114 b) with half-up rounding, clamped
    to [0, 255]. Equal-channel input (v, v, v) maps back to v.
    """
    for v in (r, g, b):
        if not 0 <= v <= 255:
            raise ValueError(f"channel value {v} outside [0, 255]")
    y = _R_WEIGHT * r + _G_WEIGHT * g + _B_WEIGHT * b
    return int(min(255, np.floor(y + 0.5)))


def _rgb_array_to_gray(rgb):
    """Vectorized BT.601 conversion of an (H, W, 3) uint8 array."""
    y = (
        _R_WEIGHT * rgb[..., 0].astype(np.float64)
        + _G_WEIGHT * rgb[..., 1]
        + _B_WEIGHT * rgb[..., 2]
    )
    return np.minimum(np.floor(y + 0.5), 255).astype(np.uint8)


def _read_pgm(path):
    """Decode a binary PGM (P5) file with maxval <= 255.

    Header tokens may be separated by any whitespace and '#' comments;
    exactly one whitespace byte separates the maxval from the raster.
    """
    with open(path, "rb") as fh:
        data = fh.read()

    if not data.startswith(b"P5"):
        raise ImageFormatError(f"{path}: not a binary PGM (P5) file")

    # Tokenize the header: magic, width, height, maxval.
    pos = 2
    tokens = []
    while len(tokens) < 3:
        # skip whitespace and comments
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos : pos + 1] == b"#":
            eol = data.find(b"\n", pos)
            if eol < 0:
                raise ImageFormatError(f"{path}: unterminated comment in header")
            pos = eol + 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise ImageFormatError(f"{path}: truncated PGM header")
        tokens.append(data[start:pos])
    pos += 1  # the single whitespace byte after maxval

    try:
        width, height, maxval = (int(t) for t in tokens)
    except ValueError:
        raise ImageFormatError(f"{path}: non-numeric PGM header fields") from None
    if width < 1 or height < 1:
        raise ImageFormatError(f"{path}: bad PGM dimensions {width}x{height}")
    if not 0 < maxval <= 255:
        raise ImageFormatError(
            f"{path}: unsupported PGM maxval {maxval} (only 8-bit supported)"
        )

    raster = data[pos : pos + width * height]
    if len(raster) != width * height:
        raise ImageFormatError(f"{path}: PGM raster shorter than header promises")
    return np.frombuffer(raster, dtype=np.uint8).reshape(height, width).copy()


def write_pgm(img, path):
    """Write a 2-D uint8 array as a binary PGM (P5) file."""
    img = np.asarray(img)
    if img.ndim != 2:
        raise ValueError("write_pgm expects a 2-D array")
    img = img.astype(np.uint8)
    height, width = img.shape
    with open(path, "wb") as fh:
        fh.write(b"P5\n%d %d\n255\n" % (width, height))
        fh.write(img.tobytes())


def _read_png(path):
    """Decode an 8-bit PNG; grayscale passes through, RGB is converted."""
    try:
        with Image.open(path) as im:
            im.load()
            mode = im.mode
            if mode == "L":
                arr = np.asarray(im, dtype=np.uint8)
                return arr.copy()
            if mode in ("RGB", "RGBA"):
                rgb = np.asarray(im.convert("RGB"), dtype=np.uint8)
                return _rgb_array_to_gray(rgb)
            raise ImageFormatError(
                f"{path}: unsupported PNG mode {mode!r} (only 8-bit gray or RGB)"
            )
    except ImageFormatError:
        raise
    except Exception as exc:
        raise ImageFormatError(f"{path}: cannot decode PNG ({exc})") from exc


def load_image(path):
    """Load a PGM (P5) or PNG file as a 2-D uint8 grayscale array.

    Raises
    ------
    FileNotFoundError
        If the path does not exist.
    ImageFormatError
        On unsupported formats, bit depths > 8, or corrupt headers; the
        message always includes the offending path.
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(f"{path}: no such image file")
    with open(path, "rb") as fh:
        magic = fh.read(8)
    if magic.startswith(b"P5"):
        return _read_pgm(path)
    if magic.startswith(b"\x89PNG"):
        return _read_png(path)
    raise ImageFormatError(f"{path}: unsupported image format (need P5 PGM or PNG)")


def load_dataset(root):
    """Load a class-per-subdirectory image tree.

    Layout: ``<root>/<class_name>/<image files>``. Class names are the
    sorted subdirectory names; within a class, images are sorted by
    filename, so ordering is a pure function of the directory listing.
    Unreadable files are skipped with a warning; a class whose files are
    all unreadable (or absent) is an error.
    """
    if not os.path.isdir(root):
        raise FileNotFoundError(f"{root}: no classes found (not a directory)")
    class_names = sorted(
        d for d in os.listdir(root) if os.path.isdir(os.path.join(root, d))
    )
    if not class_names:
        raise ValueError(f"{root}: no classes found")

    images = []
    labels = []
    skipped = 0
    for label, name in enumerate(class_names):
        class_dir = os.path.join(root, name)
        files = sorted(
            f
            for f in os.listdir(class_dir)
            if f.lower().endswith(_IMAGE_EXTENSIONS)
            and os.path.isfile(os.path.join(class_dir, f))
        )
        loaded = 0
        for fname in files:
            try:
                images.append(load_image(os.path.join(class_dir, fname)))
            except (ImageFormatError, OSError) as exc:
                warnings.warn(f"skipping unreadable image: {exc}")
                skipped += 1
                continue
            labels.append(label)
            loaded += 1
        if loaded == 0:
            raise ValueError(f"{class_dir}: class {name!r} has no readable images")
    if skipped:
        warnings.warn(f"{root}: skipped {skipped} unreadable file(s)")
    return LabeledDataset(images=images, labels=np.array(labels), class_names=class_names)


def save_dataset(dataset, root):
    """Materialize a LabeledDataset as a PGM tree (inverse of load_dataset)."""
    os.makedirs(root, exist_ok=True)
    digits = max(4, len(str(len(dataset))))
    for idx, (img, label) in enumerate(zip(dataset.images, dataset.labels)):
        class_dir = os.path.join(root, dataset.class_names[label])
        os.makedirs(class_dir, exist_ok=True)
        write_pgm(img, os.path.join(class_dir, f"img_{idx:0{digits}d}.pgm"))
