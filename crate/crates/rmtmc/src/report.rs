//! Report rows pairing Monte Carlo estimates with exact predictions.

#[derive(Clone, Debug)]
pub struct ReportRow {
    pub quantity: String,
    pub n: usize,
    pub samples: usize,
    pub estimate: f64,
    pub std_err: f64,
    pub prediction: Option<f64>,
    /// Where the prediction came from (which transform or closed form).
    pub provenance: String,
    pub z: Option<f64>,
}

impl ReportRow {
    pub fn predicted(
        quantity: impl Into<String>,
        n: usize,
        samples: usize,
        estimate: f64,
        std_err: f64,
        prediction: f64,
        provenance: impl Into<String>,
    ) -> Self {
        let z = if std_err == 0.0 {
            if estimate == prediction {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (estimate - prediction) / std_err
        };
        ReportRow {
            quantity: quantity.into(),
            n,
            samples,
            estimate,
            std_err,
            prediction: Some(prediction),
            provenance: provenance.into(),
            z: Some(z),
        }
    }

    pub fn informational(
        quantity: impl Into<String>,
        n: usize,
        samples: usize,
        estimate: f64,
        std_err: f64,
        provenance: impl Into<String>,
    ) -> Self {
        ReportRow {
            quantity: quantity.into(),
            n,
            samples,
            estimate,
            std_err,
            prediction: None,
            provenance: provenance.into(),
            z: None,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct FluctuationReport {
    pub rows: Vec<ReportRow>,
}

impl FluctuationReport {
    pub fn push(&mut self, row: ReportRow) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: FluctuationReport) {
        self.rows.extend(other.rows);
    }

    /// Largest |z| over rows that carry a prediction.
    pub fn max_abs_z(&self) -> f64 {
        self.rows
            .iter()
            .filter_map(|r| r.z)
            .map(f64::abs)
            .fold(0.0, f64::max)
    }

    pub fn all_within(&self, bound: f64) -> bool {
        self.max_abs_z() <= bound
    }

    /// CSV serialization; fields contain no commas and numbers use the
    /// default float formatting, so the bytes are a deterministic function
    /// of the rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("quantity,N,S,estimate,std_err,prediction,provenance,z\n");
        for r in &self.rows {
            let pred = r.prediction.map(|p| p.to_string()).unwrap_or_default();
            let z = r.z.map(|z| z.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.quantity, r.n, r.samples, r.estimate, r.std_err, pred, r.provenance, z
            ));
        }
        out
    }
}
