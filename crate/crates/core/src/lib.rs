//! A workbench for computing with finitely presented inverse monoids.
//!
//! The pieces fit together like this: [`words`] supplies alphabets and formal
//! words; [`xgraph`] the birooted involutive graphs and the folding kernel;
//! [`presentation`] the presentations and example fixtures; [`stephen`]
//! the budgeted Schützenberger-graph approximation and the semi-decision
//! tests built on it; [`oracle`] word-problem and normal-form oracles for
//! maximal group images; [`geometry`] embedded closures inside group Cayley
//! balls, empirical distortion profiles, and prefix-monoid membership;
//! [`finverse`] effective maximal-element searches; [`propa`] finite-scale
//! Property A witness checking and transport.

pub mod finverse;
pub mod geometry;
pub mod oracle;
pub mod presentation;
pub mod propa;
pub mod stephen;
pub mod words;
pub mod xgraph;

pub use stephen::TriBool;
