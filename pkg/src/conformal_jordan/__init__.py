"""Jordan algebras, conformal completions and causal Makarevič spaces."""
