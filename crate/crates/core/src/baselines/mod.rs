//! Comparison classifiers: batch perceptron criterion, support-vector
//! linear solve, Fisher linear discriminant and the 2-2-1 XOR network.

mod fisher;
mod nn;
mod perceptron;
mod svm;
mod text;

pub use crate::datasets::AugmentedRow;
pub use fisher::{fisher_discriminant, FisherResult, DEGENERATE_TOLERANCE, FISHER_RIDGE};
pub use nn::{
    nn_forward, train_xor_nn, xor_loss_and_gradient, ErrorConvention, HiddenWeights, NnConfig,
    NnResult, OutputWeights, XOR_INPUTS, XOR_TARGETS,
};
pub use perceptron::{linear_label, train_perceptron, PerceptronConfig, PerceptronResult};
pub use svm::{svm_support_solve, SvmSolution};
pub use text::curve_csv;
