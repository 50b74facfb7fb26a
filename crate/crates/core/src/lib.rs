pub mod clan;
pub mod perm;
pub mod poset;
pub mod weak_order;
pub mod hess;
pub mod flag_oracle;
pub mod linalg;
pub mod poly;
pub mod schubert;
pub mod verify;
