//! Symmetrization processes (placeholder).
