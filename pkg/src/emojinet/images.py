"""Region-color fingerprints and nearest-neighbor image alignment.

Every rendering is composited over a fill color, resampled to 300x300 and
cut into a 5x5 lattice of 60x60 regions. A fingerprint is the mean RGB of
each region; two fingerprints are compared by summing the Euclidean RGB
distance of corresponding regions.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import EmojiNetError, ImageDecodeError

CANVAS = 300
GRID = 5
REGION = CANVAS // GRID
WHITE = (255, 255, 255)


@dataclass(frozen=True)
class ImageFingerprint:
    regions: tuple[tuple[float, float, float], ...]
    source_path: str = ""
    owner_unicode: str | None = None

    def __post_init__(self):
        regions = tuple(tuple(float(c) for c in rgb) for rgb in self.regions)
        if len(regions) != GRID * GRID or any(len(rgb) != 3 for rgb in regions):
            raise ValueError(f"fingerprint needs {GRID * GRID} RGB triples")
        if any(not 0.0 <= c <= 255.0 for rgb in regions for c in rgb):
            raise ValueError("fingerprint channel outside [0, 255]")
        object.__setattr__(self, "regions", regions)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.regions, dtype=np.float64)


@dataclass(frozen=True)
class AlignmentResult:
    test_path: str
    matched_unicode: str
    dissimilarity: float
    # best distance to an example owned by a different emoji; a small gap flags a near-tie
    runner_up_dissimilarity: float
    matched_path: str = ""

    def to_record(self) -> dict:
        return {
            "test_path": self.test_path,
            "matched_unicode": self.matched_unicode,
            "dissimilarity": self.dissimilarity,
            "runner_up_dissimilarity": self.runner_up_dissimilarity,
        }


def _composite(img: Image.Image, fill) -> np.ndarray:
    rgba = img.convert("RGBA")
    arr = np.asarray(rgba, dtype=np.float64)
    alpha = arr[..., 3:4] / 255.0
    return arr[..., :3] * alpha + np.asarray(fill, dtype=np.float64) * (1.0 - alpha)


def _area_weights(n: int) -> np.ndarray:
    # row i holds the fractional overlap of output pixel i with each source pixel
    scale = n / CANVAS
    lo = np.arange(CANVAS)[:, None] * scale
    j = np.arange(n)[None, :]
    overlap = np.clip(np.minimum(lo + scale, j + 1) - np.maximum(lo, j), 0.0, None)
    return overlap / scale


def _resample(rgb: np.ndarray, resample: Image.Resampling | None) -> np.ndarray:
    if rgb.shape[:2] == (CANVAS, CANVAS):
        return rgb
    if resample is None:
        wy, wx = _area_weights(rgb.shape[0]), _area_weights(rgb.shape[1])
        return np.einsum("ij,jkc,lk->ilc", wy, rgb, wx, optimize=True)
    channels = [
        np.asarray(
            Image.fromarray(rgb[..., c].astype(np.float32)).resize((CANVAS, CANVAS), resample),
            dtype=np.float64,
        )
        for c in range(3)
    ]
    return np.stack(channels, axis=-1)


def fingerprint(
    image, fill=WHITE, owner_unicode: str | None = None, resample: Image.Resampling | None = None
) -> ImageFingerprint:
    """Fingerprint an image given as a path or an open ``PIL.Image``.

    By default the image is resampled by exact area averaging, so a region's
    mean is unchanged by rescaling. A Pillow filter such as
    ``Image.Resampling.BILINEAR`` can be passed instead; it bleeds color
    across region edges.
    """
    source = ""
    if isinstance(image, Image.Image):
        img = image
    else:
        source = str(image)
        try:
            with Image.open(image) as im:
                im.load()
                img = im.copy()
        except (UnidentifiedImageError, OSError) as exc:
            raise ImageDecodeError(image, f"cannot decode image: {exc}") from exc
    if img.width == 0 or img.height == 0:
        raise ImageDecodeError(source or "<image>", "zero-dimension image")

    rgb = _resample(_composite(img, fill), resample)
    means = rgb.reshape(GRID, REGION, GRID, REGION, 3).mean(axis=(1, 3))
    means = np.clip(means, 0.0, 255.0)
    return ImageFingerprint(
        regions=tuple(map(tuple, means.reshape(GRID * GRID, 3))),
        source_path=source,
        owner_unicode=owner_unicode,
    )


def fingerprint_many(items: Sequence[tuple[str | Path, str | None]], fill=WHITE, workers: int | None = None):
    """Fingerprint ``(path, owner)`` pairs; output order follows input order."""
    def one(item):
        path, owner = item
        return fingerprint(path, fill=fill, owner_unicode=owner)

    if workers == 1 or len(items) < 2:
        return [one(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(one, items))


def dissimilarity(a: ImageFingerprint, b: ImageFingerprint) -> float:
    diff = a.as_array() - b.as_array()
    return float(np.sqrt((diff * diff).sum(axis=1)).sum())


def align(
    test_images: Iterable[ImageFingerprint], example_images: Iterable[ImageFingerprint]
) -> list[AlignmentResult]:
    """Match every test fingerprint to the owner of its least dissimilar example.

    Ties on distance go to the smaller owner codepoint, then the smaller path.
    Results are returned in the order of ``test_images``.
    """
    examples = sorted(example_images, key=lambda f: (f.owner_unicode or "", f.source_path))
    if not examples:
        raise EmojiNetError("cannot align against an empty example set")
    if any(f.owner_unicode is None for f in examples):
        raise EmojiNetError("every example image must carry its owner codepoint")
    stack = np.stack([f.as_array() for f in examples])
    owners = [f.owner_unicode for f in examples]

    results = []
    for test in test_images:
        diff = stack - test.as_array()
        dists = np.sqrt((diff * diff).sum(axis=2)).sum(axis=1)
        # examples are pre-sorted by (owner, path), so argmin's first-index rule is the tie-break
        best = int(np.argmin(dists))
        owner = owners[best]
        others = [d for d, o in zip(dists, owners) if o != owner]
        if others:
            runner_up = float(min(others))
        elif len(dists) > 1:
            runner_up = float(np.partition(dists, 1)[1])
        else:
            runner_up = float(dists[best])
        results.append(
            AlignmentResult(
                test_path=test.source_path,
                matched_unicode=owner,
                dissimilarity=float(dists[best]),
                runner_up_dissimilarity=runner_up,
                matched_path=examples[best].source_path,
            )
        )
    return results


def write_alignment_report(results: Iterable[AlignmentResult], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for r in results:
            f.write(json.dumps(r.to_record(), ensure_ascii=False) + "\n")

