//! Empty; the report lives in `tests/acceptance.rs`.
