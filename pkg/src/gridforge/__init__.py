"""Procedural generator/verifier engine for ARC-style grid transformation
examples: a small grid DSL, difficulty-pruned sampling, ten generator/
verifier task archetypes, difficulty metrics, and a deterministic
verified-dataset pipeline."""

from .grid import (
    Cell,
    CellSet,
    Example,
    Grid,
    GridObject,
    canonical_digest,
    canvas,
    connected_components,
    enclosed_cells,
    hmirror,
    paint,
    palette,
    rot90,
    rot180,
    upscale,
    vmirror,
)
from .metrics import (
    DifficultyReport,
    difficulty_report,
    pso_counts,
    pso_difficulty,
    rng_difficulty_of,
)
from .objects import (
    ShapeBudget,
    candidate_positions,
    colorize,
    place_rejection,
    sample_shape,
)
from .pipeline import (
    BenchResult,
    RunConfig,
    RunStats,
    band_by_difficulty,
    bench_archetype,
    run_generation,
    write_arc_json,
    write_jsonl,
)
from .rng import (
    FULL_BOUNDS,
    DifficultyBounds,
    TracedRng,
    derive_seed,
    rng_difficulty,
)
from .tasks import (
    ARCHETYPES,
    GenerationAttempt,
    TaskArchetype,
    VerificationError,
    generate,
    verify,
)

__version__ = "0.1.0"
