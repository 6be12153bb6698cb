//! Ready-made fields with primitive moduli, used by the guide, the CLI
//! verification suites and the test fixtures.
//!
//! Each modulus is monic, irreducible and primitive (the class of `x`
//! generates the multiplicative group); `conway_moduli_are_primitive` in the
//! `galois` tests pins these properties down.

use crate::galois::Field;

/// `F_9 = GF(3^2)` with modulus `x^2 + 2x + 2`.
pub fn f9() -> Field {
    Field::new(3, &[2, 2, 1]).unwrap()
}

/// `GF(3^3)` with modulus `x^3 + 2x + 1`.
pub fn f3_3() -> Field {
    Field::new(3, &[1, 2, 0, 1]).unwrap()
}

/// `GF(3^4)` with modulus `x^4 + 2x^3 + 2`.
pub fn f3_4() -> Field {
    Field::new(3, &[2, 0, 0, 2, 1]).unwrap()
}

/// `GF(3^5)` with modulus `x^5 + 2x + 1`.
pub fn f3_5() -> Field {
    Field::new(3, &[1, 2, 0, 0, 0, 1]).unwrap()
}

/// `GF(3^6)` with modulus `x^6 + 2x^4 + x^2 + 2x + 2`.
pub fn f3_6() -> Field {
    Field::new(3, &[2, 2, 1, 0, 2, 0, 1]).unwrap()
}

/// `GF(5^2)` with modulus `x^2 + 4x + 2`.
pub fn f5_2() -> Field {
    Field::new(5, &[2, 4, 1]).unwrap()
}

/// `GF(5^3)` with modulus `x^3 + 3x + 3`.
pub fn f5_3() -> Field {
    Field::new(5, &[3, 3, 0, 1]).unwrap()
}

/// `GF(5^4)` with modulus `x^4 + 4x^2 + 4x + 2`.
pub fn f5_4() -> Field {
    Field::new(5, &[2, 4, 4, 0, 1]).unwrap()
}

/// `GF(7^2)` with modulus `x^2 + 6x + 3`.
pub fn f7_2() -> Field {
    Field::new(7, &[3, 6, 1]).unwrap()
}

/// `GF(7^4)` with modulus `x^4 + 5x^2 + 4x + 3`.
pub fn f7_4() -> Field {
    Field::new(7, &[3, 4, 5, 0, 1]).unwrap()
}
