//! Linearized polynomials.
