//! One-stop summary of a constructed code.

use std::fmt;

use serde::Serialize;

use crate::bchcodes::{defining_set, generator_from_set, is_lcd, CodeSpec, GENERATOR_CEILING};
use crate::dimensions::{predict, DimPrediction, DimValue, DistanceClaim, TheoremId};
use crate::distance::{
    bch_lower, distance_auto, sphere_packing_upper, DistanceError, DistanceMethod, DistanceResult, SearchBudget, Witness,
};
use crate::polyring::{Poly, RootField};
use crate::{Coverage, Exec};

/// How much distance work to do.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DistanceMode {
    /// BCH and sphere-packing bounds only.
    #[default]
    Bounds,
    /// Witnesses and exact search within the budget.
    Auto,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    pub distance: DistanceMode,
    pub generator: bool,
    pub budget: SearchBudget,
    pub exec: Exec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictionView {
    #[serde(flatten)]
    pub value: DimValue,
    pub source_theorem: TheoremId,
    pub domain: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance_claim: Option<DistanceClaim>,
}

impl From<DimPrediction> for PredictionView {
    fn from(d: DimPrediction) -> Self {
        PredictionView {
            value: d.value,
            source_theorem: d.source,
            domain: d.domain,
            distance_claim: d.distance,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceView {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<u64>,
    pub lower: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<u64>,
    pub method: DistanceMethod,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    #[serde(flatten)]
    pub spec: CodeSpec,
    pub k: u64,
    pub lcd: bool,
    pub designed_distance: u64,
    pub bch_lower: u64,
    pub distance: DistanceView,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<Poly>,
    pub witnesses: Vec<Witness>,
    pub prediction: Coverage<PredictionView>,
    /// Whether the closed form agrees with the constructive dimension;
    /// `None` when no formula covers the code.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_matches: Option<bool>,
}

impl CodeReport {
    pub fn build(spec: &CodeSpec, opts: &ReportOptions) -> Result<Self, DistanceError> {
        let set = defining_set(spec);
        let n = spec.n();
        let k = n - set.size();
        let lower = bch_lower(spec);
        let distance = match opts.distance {
            DistanceMode::Auto => distance_auto(spec, opts.budget, opts.exec)?,
            DistanceMode::Bounds => DistanceResult {
                lower,
                upper: (k > 0).then(|| sphere_packing_upper(n, k, spec.params().q())),
                exact: None,
                method: DistanceMethod::Bch,
                witness: None,
            },
        };
        let generator = if opts.generator && n <= GENERATOR_CEILING {
            let rf = RootField::new(spec.params()).map_err(crate::bchcodes::CodeError::from)?;
            Some(generator_from_set(&set, &rf)?)
        } else {
            None
        };
        let prediction = predict(spec).map(PredictionView::from);
        let formula_matches = prediction.as_ref().covered().map(|p| p.value.admits(k));
        Ok(CodeReport {
            spec: *spec,
            k,
            lcd: is_lcd(&set),
            designed_distance: spec.designed_distance(),
            bch_lower: lower,
            distance: DistanceView {
                exact: distance.exact,
                lower: distance.lower,
                upper: distance.upper,
                method: distance.method,
            },
            generator,
            witnesses: distance.witness.into_iter().collect(),
            prediction,
            formula_matches,
        })
    }

    pub fn n(&self) -> u64 {
        self.spec.n()
    }

    /// `d` as printed in a parameter triple: exact value or `≥lower`.
    pub fn d_label(&self) -> String {
        match self.distance.exact {
            Some(d) => d.to_string(),
            None => format!("≥{}", self.distance.lower),
        }
    }
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.spec.label())?;
        writeln!(f, "  parameters        [{}, {}, {}]", self.n(), self.k, self.d_label())?;
        writeln!(f, "  lcd               {}", self.lcd)?;
        writeln!(f, "  designed distance {}", self.designed_distance)?;
        writeln!(f, "  bch lower bound   {}", self.bch_lower)?;
        if let Some(u) = self.distance.upper {
            writeln!(f, "  upper bound       {u}")?;
        }
        writeln!(f, "  distance method   {:?}", self.distance.method)?;
        match &self.prediction {
            Coverage::Covered(p) => {
                let v = match p.value {
                    DimValue::Exact { k } => format!("k = {k}"),
                    DimValue::Bounds { k_lower, k_upper } => format!("{k_lower} <= k <= {k_upper}"),
                };
                writeln!(f, "  formula           {v} ({})", p.source_theorem)?;
            }
            Coverage::NotCovered { reason } => writeln!(f, "  formula           not covered: {reason}")?,
        }
        for w in &self.witnesses {
            let terms: Vec<String> = w.terms().iter().map(|(e, c)| format!("{c}x^{e}")).collect();
            writeln!(f, "  witness           {}", terms.join(" + "))?;
        }
        if let Some(g) = &self.generator {
            writeln!(f, "  generator         {:?}", g.coeffs())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::CosetParams;

    #[test]
    fn report_json_shape() {
        let spec = CodeSpec::lcd_a(CosetParams::new(5, 2).unwrap(), 6).unwrap();
        let opts = ReportOptions {
            distance: DistanceMode::Auto,
            generator: true,
            ..Default::default()
        };
        let r = CodeReport::build(&spec, &opts).unwrap();
        assert_eq!((r.n(), r.k, r.distance.exact), (24, 9, Some(12)));
        assert!(r.lcd);
        assert_eq!(r.formula_matches, Some(true));
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "family",
            "q",
            "m",
            "n",
            "delta",
            "b",
            "k",
            "lcd",
            "designed_distance",
            "bch_lower",
            "distance",
            "generator",
            "witnesses",
            "prediction",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["prediction"]["source_theorem"], "lcd-a");
        assert_eq!(v["prediction"]["kind"], "EXACT");
        assert_eq!(v["family"], "LCD_A_EVEN_N");
    }

    #[test]
    fn text_rendering() {
        let spec = CodeSpec::narrow(CosetParams::new(2, 5).unwrap(), 9).unwrap();
        let r = CodeReport::build(&spec, &ReportOptions::default()).unwrap();
        let text = r.to_string();
        assert!(text.contains("[31, 11, ≥11]"), "{text}");
    }
}
