//! Cup diagrams, circle diagrams and the combinatorial intersection rule.

mod circle;
mod diagram;

pub use circle::{
    circle_diagram, intersection_graph, intersection_type, node_index, node_name, CircleDiagram, Component, Edge,
    IntersectionGraph, IntersectionType, Side, VertexCountMismatch,
};
pub use diagram::{
    diagrams_for_shape, enumerate_cup_diagrams, enumerate_undecorated, Cup, CupDiagram, DiagramError, End, Parity, Ray,
};
