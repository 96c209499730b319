// SPDX-License-Identifier: Apache-2.0

//! Exact verification of generator identities built from the complexified
//! quaternions and octonions.

// Tensor code reads best with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod check;
pub mod cli;
pub mod crossprod;
pub mod generators;
pub mod lagrangian;
pub mod linalg;
pub mod scalar;
pub mod suites;
pub mod transforms;
