"""
Basis catalog: Hermite functions Φ_α, special Hermite functions Φ_{α,β} and
Laguerre kernels φ_k up to a total order K on one lattice.

Construction is the only mutating phase. Special Hermite functions are
computed on first request (there are O(K^{2d}) of them) under a lock, so a
built catalog can be shared between threads.
"""

import hashlib
import json
import logging
import os
import shutil
import threading
from pathlib import Path

import numpy as np

from ..data.defaults import CACHE_DIR_ENV
from ..errors import CatalogError, TwistlabError
from ..lattice.field import Field
from ..lattice.io import load_field, save_field
from ..lattice.parallel import ordered_map
from ..schemas.grid import GridSpec
from .hermite import MultiIndex, hermite_matrix, hermite_nd, indices_up_to
from .special_hermite import laguerre_kernel, special_hermite

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


def catalog_key(d: int, k_max: int, grid: GridSpec) -> dict:
    return {
        "d": d,
        "k_max": k_max,
        "grid": {
            "dim": grid.dim,
            "points": grid.points,
            "half_width": grid.half_width,
        },
    }


def key_digest(key: dict) -> str:
    """Stable hash of a catalog key."""
    return hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()


def _file_digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _index_tag(index: MultiIndex) -> str:
    return "-".join(str(c) for c in index)


class BasisCatalog:
    """Cached bases on the base lattice `grid` and its phase-space lattice."""

    def __init__(
        self,
        d: int,
        k_max: int,
        grid: GridSpec,
        hermite: dict[MultiIndex, Field],
        special: dict[tuple[MultiIndex, MultiIndex], Field] | None = None,
        laguerre: dict[int, Field] | None = None,
    ):
        if grid.dim != d:
            raise CatalogError(f"catalog grid has dim {grid.dim}, expected d={d}")
        self.d = d
        self.k_max = k_max
        self.grid = grid
        self._hermite = dict(hermite)
        self._special = dict(special or {})
        self._laguerre = dict(laguerre or {})
        self._matrix: tuple[list[MultiIndex], np.ndarray] | None = None
        self._lock = threading.Lock()

    @classmethod
    def build(
        cls,
        d: int,
        k_max: int,
        grid: GridSpec,
        include_special: bool = False,
        workers: int | None = None,
    ) -> "BasisCatalog":
        """Generate every Φ_α with |α| ≤ K, in parallel over indices."""
        indices = indices_up_to(d, k_max)
        fields = ordered_map(lambda a: hermite_nd(a, grid), indices, workers)
        catalog = cls(d, k_max, grid, dict(zip(indices, fields, strict=True)))
        logger.info(f"Built {len(indices)} Hermite functions (d={d}, K={k_max})")
        if include_special:
            pairs = [(a, b) for a in indices for b in indices]
            specials = ordered_map(
                lambda ab: special_hermite(ab[0], ab[1], catalog.phase_grid),
                pairs,
                workers,
            )
            catalog._special.update(zip(pairs, specials, strict=True))
            logger.info(f"Built {len(pairs)} special Hermite functions")
        return catalog

    @property
    def key(self) -> dict:
        return catalog_key(self.d, self.k_max, self.grid)

    @property
    def phase_grid(self) -> GridSpec:
        return self.grid.doubled()

    def indices(self, order: int | None = None) -> list[MultiIndex]:
        """Cataloged multi-indices, optionally only those of total order `order`."""
        if order is None:
            return list(self._hermite)
        self.require_order(order)
        return [a for a in self._hermite if a.order == order]

    def require_order(self, k: int) -> None:
        if not 0 <= k <= self.k_max:
            raise CatalogError(f"order {k} is outside the catalog range 0..{self.k_max}")

    def _require_index(self, index: MultiIndex) -> MultiIndex:
        if index.dim != self.d:
            raise CatalogError(f"index {index} does not match d={self.d}")
        self.require_order(index.order)
        return index

    def hermite(self, alpha) -> Field:
        alpha = self._require_index(MultiIndex.of(alpha))
        return self._hermite[alpha]

    def special(self, alpha, beta) -> Field:
        """Φ_{α,β}, generated on first use."""
        key = (
            self._require_index(MultiIndex.of(alpha)),
            self._require_index(MultiIndex.of(beta)),
        )
        with self._lock:
            if key not in self._special:
                logger.debug(f"Generating special Hermite Phi_{key[0]},{key[1]}")
                self._special[key] = special_hermite(key[0], key[1], self.phase_grid)
            return self._special[key]

    def special_block(self, beta) -> np.ndarray:
        """Columns Φ_{α,β} (flattened) for every cataloged α, in hermite_matrix order."""
        indices, _ = self.hermite_matrix()
        return np.stack([self.special(a, beta).values.reshape(-1) for a in indices], axis=1)

    def special_bytes(self) -> int:
        """Memory held once every Φ_{α,β} is generated."""
        count = len(self._hermite)
        return 16 * self.phase_grid.size * count * count

    def laguerre(self, k: int) -> Field:
        """φ_k on the phase-space lattice."""
        self.require_order(k)
        with self._lock:
            if k not in self._laguerre:
                self._laguerre[k] = laguerre_kernel(k, self.phase_grid)
            return self._laguerre[k]

    def hermite_matrix(self) -> tuple[list[MultiIndex], np.ndarray]:
        """Columns Φ_α (flattened) for every cataloged α."""
        with self._lock:
            if self._matrix is None:
                self._matrix = hermite_matrix(self.grid, self.k_max)
            return self._matrix

    # =========================================================================
    # Persistence
    # =========================================================================

    def save(self, directory: Path) -> Path:
        """One TWF1 file per element plus manifest.json with sha256 checksums."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        entries = []

        def record(kind: str, name: str, field: Field, **labels) -> None:
            path = save_field(field, directory / name)
            entries.append(
                {"kind": kind, "file": name, "sha256": _file_digest(path), **labels}
            )

        for alpha, field in self._hermite.items():
            record("hermite", f"hermite_{_index_tag(alpha)}.twf", field, alpha=list(alpha))
        for (alpha, beta), field in self._special.items():
            record(
                "special",
                f"special_{_index_tag(alpha)}_{_index_tag(beta)}.twf",
                field,
                alpha=list(alpha),
                beta=list(beta),
            )
        for k, field in self._laguerre.items():
            record("laguerre", f"laguerre_{k}.twf", field, k=k)

        manifest = {"key": self.key, "digest": key_digest(self.key), "entries": entries}
        manifest_path = directory / MANIFEST_NAME
        manifest_path.write_text(json.dumps(manifest, indent=2))
        logger.info(f"Saved catalog with {len(entries)} elements to {directory}")
        return manifest_path

    @classmethod
    def load(cls, directory: Path, d: int, k_max: int, grid: GridSpec) -> "BasisCatalog":
        """Read a saved catalog; a different key or a bad checksum is a CatalogError."""
        directory = Path(directory)
        manifest_path = directory / MANIFEST_NAME
        try:
            manifest = json.loads(manifest_path.read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise CatalogError(f"cannot read {manifest_path}: {e}") from e

        expected = catalog_key(d, k_max, grid)
        if manifest.get("digest") != key_digest(expected):
            raise CatalogError(
                f"catalog in {directory} was built for {manifest.get('key')}, "
                f"not {expected}"
            )

        hermite: dict[MultiIndex, Field] = {}
        special: dict[tuple[MultiIndex, MultiIndex], Field] = {}
        laguerre: dict[int, Field] = {}
        for entry in manifest.get("entries", []):
            path = directory / entry["file"]
            if not path.exists() or _file_digest(path) != entry["sha256"]:
                raise CatalogError(f"checksum mismatch for {path}")
            try:
                field = load_field(path)
            except TwistlabError as e:
                raise CatalogError(f"unreadable catalog element {path}: {e}") from e
            if entry["kind"] == "hermite":
                hermite[MultiIndex.of(entry["alpha"])] = field
            elif entry["kind"] == "special":
                pair = (MultiIndex.of(entry["alpha"]), MultiIndex.of(entry["beta"]))
                special[pair] = field
            else:
                laguerre[int(entry["k"])] = field

        if set(hermite) != set(indices_up_to(d, k_max)):
            raise CatalogError(f"catalog in {directory} is missing Hermite functions")
        logger.debug(f"Loaded catalog from {directory}")
        return cls(d, k_max, grid, hermite, special, laguerre)


class CatalogCache:
    """Catalogs on disk keyed by a hash of (d, K, grid)."""

    def __init__(self, cache_dir: Path | None = None):
        if cache_dir is None:
            env = os.environ.get(CACHE_DIR_ENV)
            cache_dir = Path(env) if env else Path.home() / ".cache" / "twistlab"
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)

    def path_for(self, d: int, k_max: int, grid: GridSpec) -> Path:
        return self.cache_dir / key_digest(catalog_key(d, k_max, grid))[:16]

    def get(
        self,
        d: int,
        k_max: int,
        grid: GridSpec,
        include_special: bool = False,
        workers: int | None = None,
    ) -> BasisCatalog:
        """Load a cached catalog, or build and store one on a miss or mismatch."""
        path = self.path_for(d, k_max, grid)
        if (path / MANIFEST_NAME).exists():
            try:
                catalog = BasisCatalog.load(path, d, k_max, grid)
                logger.debug(f"Using cached catalog {path}")
                return catalog
            except CatalogError as e:
                logger.warning(f"Rebuilding catalog {path}: {e}")

        logger.debug(f"Catalog cache miss for d={d}, K={k_max}")
        catalog = BasisCatalog.build(d, k_max, grid, include_special, workers)
        try:
            catalog.save(path)
        except OSError as e:
            logger.warning(f"Failed to save catalog to {path}: {e}")
        return catalog

    def clear(self) -> None:
        if self.cache_dir.exists():
            shutil.rmtree(self.cache_dir)
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            logger.info("Cleared catalog cache")
