//! Classification of closed orientable 5-manifolds with fundamental group ℤ/2 and
//! torsion-free `π₂`, together with the supporting exact algebra.

pub mod ahss;
pub mod algebra;
pub mod bordism;
pub mod bundle;
pub mod forms;
pub mod sample;
pub mod syntax;
