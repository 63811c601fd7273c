pub mod classify;
pub mod mesh;
pub mod sample;
pub mod verify;
