pub mod rational;
pub mod poly;
pub mod groebner;
pub mod matrix;
pub mod ideal;
pub mod report;
pub mod sample;
pub mod sp;
pub mod sl2;
pub mod blowup;
pub mod verify;
