/// Outcome of a quadrature check of a coherent-state resolution of the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolutionReport {
    /// `max |B - I|` with `B` normalized by the predicted constant.
    pub residual: f64,
    /// `tr(Σ w P) / dim`, the constant the unnormalized sum actually delivers.
    pub constant_measured: f64,
    pub constant_expected: f64,
    /// Predicted diagonal of `B` per block (per `l` on the sphere, per `n` on the circle).
    pub profile_expected: Vec<f64>,
    /// Block averages of the diagonal of `B` as computed.
    pub profile_measured: Vec<f64>,
    /// Whether the amplitude moduli meet the condition for `B = I`.
    pub norm_condition: bool,
    /// Whether the node counts reach the exactness threshold.
    pub exact_nodes: bool,
}
