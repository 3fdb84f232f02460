//! The bijection between sorted recurrent configurations and parking
//! functions: label i of the image occupies column n - k_tilde(i), where
//! k_tilde is the lift. It carries level to area, delay to pmaj, and the
//! toppling word to the parking word.

use crate::error::{Error, Result};
use crate::graph::{CliqueIndependentGraph, Composition, ComponentKind};
use crate::parking::{self, LabelledDyckPath};
use crate::qt::QtPolynomial;
use crate::sandpile::{self, Configuration};
use crate::sorted::{self, DEFAULT_MAX_N};
use crate::toppling;
use std::collections::BTreeMap;

/// Maps a sorted recurrent configuration to its parking function. The image
/// is validated (Dyck condition plus shuffle membership) rather than assumed.
pub fn phi(g: &CliqueIndependentGraph, k: &Configuration) -> Result<LabelledDyckPath> {
    let (k_tilde, _) = sorted::lift(g, k)?;
    toppling::run(g, k)?;
    let n = g.n() as i64;
    let mut columns = Vec::with_capacity(g.n());
    for i in 1..=g.n() {
        let col = n - k_tilde.value(i);
        if col < 1 || col > n {
            return Err(Error::NotAParkingFunction(format!(
                "label {i} would land in column {col}"
            )));
        }
        columns.push(col as usize);
    }
    let path = LabelledDyckPath::new(columns)?;
    if !parking::in_shuffle(&path.reading_word(), g.mu(), g.nu()) {
        return Err(Error::NotInShuffle);
    }
    Ok(path)
}

/// Inverse map: k_tilde(i) = n - column_of(i), un-lifted by removing
/// nu_s - j from the j-th largest vertex of each independent block. The
/// reconstruction is checked to be sorted and recurrent.
pub fn phi_inverse(
    mu: &Composition,
    nu: &Composition,
    path: &LabelledDyckPath,
) -> Result<Configuration> {
    let g = CliqueIndependentGraph::new(mu.clone(), nu.clone())?;
    if path.n() != g.n() {
        return Err(Error::NotAParkingFunction(format!(
            "size {} path for a graph on {} vertices",
            path.n(),
            g.n()
        )));
    }
    if !parking::in_shuffle(&path.reading_word(), mu, nu) {
        return Err(Error::NotInShuffle);
    }
    let n = g.n() as i64;
    let mut k = Configuration::from_ascending(
        (1..=g.n()).map(|i| n - path.column_of(i) as i64).collect(),
    );
    for block in g.blocks() {
        if block.kind == ComponentKind::Independent {
            let s = block.len() as i64;
            for (j, v) in block.vertices().rev().enumerate() {
                k.set_value(v, k.value(v) - (s - (j as i64 + 1)));
            }
        }
    }
    if !sorted::is_sorted(&g, &k) {
        return Err(Error::NotSorted);
    }
    toppling::run(&g, &k)?;
    Ok(k)
}

/// Element-by-element verification of the statistic-preserving bijection for
/// one pair of compositions.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub mu: Composition,
    pub nu: Composition,
    pub n: usize,
    pub sortrec_count: usize,
    pub pf_count: usize,
    pub sandpile_polynomial: QtPolynomial,
    pub parking_polynomial: QtPolynomial,
    /// First failing configuration (printed verbatim) with the reason.
    pub counterexample: Option<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "mu = {}, nu = {}, n = {}\n",
            self.mu, self.nu, self.n
        ));
        out.push_str(&format!(
            "sorted recurrent configurations: {}\nparking functions: {}\n",
            self.sortrec_count, self.pf_count
        ));
        out.push_str(&format!("sandpile polynomial: {}\n", self.sandpile_polynomial));
        out.push_str(&format!("parking polynomial:  {}\n", self.parking_polynomial));
        match &self.counterexample {
            None => out.push_str("bijection check: PASS\n"),
            Some(c) => out.push_str(&format!("bijection check: FAIL\n{c}\n")),
        }
        out
    }
}

/// Checks, for every sorted recurrent configuration: the image is a parking
/// function of the right shuffle class, area equals level, pmaj equals delay,
/// the parking word equals the toppling word, the round trip through the
/// inverse is the identity, and the image set is exactly PF(mu;nu).
pub fn verify_theorem(mu: &Composition, nu: &Composition) -> Result<TheoremReport> {
    verify_theorem_bounded(mu, nu, DEFAULT_MAX_N)
}

pub fn verify_theorem_bounded(
    mu: &Composition,
    nu: &Composition,
    max_n: usize,
) -> Result<TheoremReport> {
    let g = CliqueIndependentGraph::new(mu.clone(), nu.clone())?;
    let configs = sorted::enumerate_sortrec_bounded(mu, nu, max_n)?;
    let paths = parking::enumerate_pf_bounded(mu, nu, max_n)?;
    let sandpile_polynomial = sorted::sortrec_polynomial_bounded(mu, nu, max_n)?;
    let parking_polynomial = parking::pf_polynomial_bounded(mu, nu, max_n)?;

    let mut counterexample = None;
    let mut image: BTreeMap<LabelledDyckPath, Configuration> = BTreeMap::new();
    let fail = |msg: String, slot: &mut Option<String>| {
        if slot.is_none() {
            *slot = Some(msg);
        }
    };

    for k in &configs {
        let res = toppling::run(&g, k)?;
        let d = match phi(&g, k) {
            Ok(d) => d,
            Err(e) => {
                fail(format!("configuration {k}: phi failed ({e})"), &mut counterexample);
                continue;
            }
        };
        let lev = sandpile::level(&g, k);
        let (_, area) = d.area_data();
        if lev < 0 || area != lev as u64 {
            fail(
                format!("configuration {k}: area {area} != level {lev}"),
                &mut counterexample,
            );
        }
        if d.pmaj() != res.delay() {
            fail(
                format!("configuration {k}: pmaj {} != delay {}", d.pmaj(), res.delay()),
                &mut counterexample,
            );
        }
        if d.parking_word() != res.sigma() {
            fail(
                format!("configuration {k}: parking word differs from the toppling word"),
                &mut counterexample,
            );
        }
        match phi_inverse(mu, nu, &d) {
            Ok(back) if &back == k => {}
            Ok(back) => fail(
                format!("configuration {k}: round trip returned {back}"),
                &mut counterexample,
            ),
            Err(e) => fail(
                format!("configuration {k}: phi_inverse failed ({e})"),
                &mut counterexample,
            ),
        }
        if let Some(previous) = image.insert(d, k.clone()) {
            fail(
                format!("configurations {previous} and {k} share an image"),
                &mut counterexample,
            );
        }
    }

    // Surjectivity onto PF(mu;nu).
    for d in &paths {
        if !image.contains_key(d) {
            fail(
                format!("parking function {d} is not in the image"),
                &mut counterexample,
            );
        }
    }
    if image.len() != paths.len() {
        fail(
            format!("image size {} != |PF| {}", image.len(), paths.len()),
            &mut counterexample,
        );
    }
    if sandpile_polynomial != parking_polynomial {
        fail(
            format!(
                "polynomials differ: {sandpile_polynomial} vs {parking_polynomial}"
            ),
            &mut counterexample,
        );
    }

    Ok(TheoremReport {
        mu: mu.clone(),
        nu: nu.clone(),
        n: g.n(),
        sortrec_count: configs.len(),
        pf_count: paths.len(),
        sandpile_polynomial,
        parking_polynomial,
        counterexample,
    })
}
