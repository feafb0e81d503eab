//! Per-graph evaluation of every suite.

use std::cell::OnceCell;

use super::SuiteId;
use crate::classes::{is_2k2_free, is_chordal, is_claw_free, is_split};
use crate::families::{
    recognize_2k2_min_tough, recognize_clawfree_half, recognize_clawfree_min_tough, recognize_split_min_tough,
    split_expand,
};
use crate::graph::{bridges, components, is_connected, simplicial_vertices, vertex_connectivity, Edge, Graph};
use crate::minimal::{
    clawfree_half_witness_unchecked, edge_witness_unchecked, minimal_toughness_value, twok2_witness_unchecked,
    verify_edge_witness,
};
use crate::rational::{ceil_double, ratio, Rational};
use crate::subsets::subsets_by_size;
use crate::toughness::{clawfree_toughness, toughness, ToughnessValue};

/// Largest order for which the all-subsets cutset check runs.
const CUTSET_SCAN_MAX_N: usize = 20;

#[derive(Debug, Default)]
pub(super) struct Finding {
    pub checked: bool,
    pub instance: Option<String>,
    pub violation: Option<String>,
}

impl Finding {
    pub fn is_recorded(&self) -> bool {
        self.instance.is_some() || self.violation.is_some()
    }

    fn checked() -> Finding {
        Finding { checked: true, ..Finding::default() }
    }
}

/// Lazily computed facts about one graph, shared by all suites.
pub(super) struct Profile<'a> {
    g: &'a Graph,
    connected: bool,
    tau: OnceCell<ToughnessValue>,
    minimal: OnceCell<Option<Rational>>,
    classes: OnceCell<[bool; 4]>,
    bridges: OnceCell<Vec<Edge>>,
}

fn option_text(t: Option<Rational>) -> String {
    t.map_or_else(|| "none".to_string(), |t| t.to_string())
}

/// First message, plus how many more edges failed.
fn summarize(mut problems: Vec<String>) -> Option<String> {
    match problems.len() {
        0 => None,
        1 => problems.pop(),
        k => Some(format!("{} (+{} more)", problems[0], k - 1)),
    }
}

impl<'a> Profile<'a> {
    pub fn new(g: &'a Graph) -> Self {
        Profile {
            g,
            connected: is_connected(g),
            tau: OnceCell::new(),
            minimal: OnceCell::new(),
            classes: OnceCell::new(),
            bridges: OnceCell::new(),
        }
    }

    fn tau(&self) -> ToughnessValue {
        *self.tau.get_or_init(|| toughness(self.g).value)
    }

    pub fn minimal(&self) -> Option<Rational> {
        *self.minimal.get_or_init(|| minimal_toughness_value(self.g))
    }

    /// Chordal, split, claw-free, 2K2-free.
    pub fn class_flags(&self) -> [bool; 4] {
        *self.classes.get_or_init(|| {
            [
                is_chordal(self.g).verdict(),
                is_split(self.g).verdict(),
                is_claw_free(self.g).verdict(),
                is_2k2_free(self.g).verdict(),
            ]
        })
    }

    fn chordal(&self) -> bool {
        self.class_flags()[0]
    }

    fn split(&self) -> bool {
        self.class_flags()[1]
    }

    fn claw_free(&self) -> bool {
        self.class_flags()[2]
    }

    fn twok2_free(&self) -> bool {
        self.class_flags()[3]
    }

    fn bridges(&self) -> &[Edge] {
        self.bridges.get_or_init(|| bridges(self.g))
    }

    fn non_bridges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.g.edges().filter(|e| !self.bridges().contains(e))
    }

    fn describe(&self, t: Rational) -> String {
        format!("t={t} classes={}", class_names(self.class_flags()))
    }

    fn minimal_instance(&self) -> Option<(Rational, String)> {
        self.minimal().map(|t| (t, self.describe(t)))
    }

    pub fn check(&self, suite: SuiteId) -> Finding {
        match suite {
            SuiteId::T4 => self.check_t4(),
            SuiteId::T7 => self.check_t7(),
            SuiteId::T8 => self.check_t8(),
            SuiteId::T11 => self.check_t11(),
            SuiteId::T12 => self.check_t12(),
            SuiteId::T16 => self.check_t16(),
            SuiteId::T17 => self.check_t17(),
            SuiteId::C18 => self.check_c18(),
            SuiteId::L19 => self.check_l19(),
            SuiteId::L14 => self.check_l14(),
            SuiteId::C1 => self.check_c1(),
            SuiteId::T20 => self.check_t20(),
            SuiteId::Kriesell => self.check_kriesell(),
            SuiteId::Deg1 => self.check_deg1(),
        }
    }

    fn check_t4(&self) -> Finding {
        if !self.chordal() {
            return Finding::default();
        }
        let mut f = Finding::checked();
        if let Some((t, text)) = self.minimal_instance() {
            if t > ratio(1, 2) && t <= ratio(1, 1) {
                f.violation = Some(format!("minimally tough chordal graph, {text}"));
            }
        }
        f
    }

    fn check_t7(&self) -> Finding {
        if !self.chordal() {
            return Finding::default();
        }
        let mut f = Finding::checked();
        if let Some((t, text)) = self.minimal_instance() {
            if t <= ratio(1, 2) {
                f.instance = Some(text);
                let bad: Vec<String> = simplicial_vertices(self.g)
                    .iter()
                    .filter(|&v| self.g.degree(v) != 1)
                    .map(|v| format!("simplicial vertex {v} has degree {}", self.g.degree(v)))
                    .collect();
                f.violation = summarize(bad);
            }
        }
        f
    }

    fn check_t8(&self) -> Finding {
        if !self.split() {
            return Finding::default();
        }
        let mut f = Finding::checked();
        if let Some((t, text)) = self.minimal_instance() {
            if t > ratio(1, 2) {
                f.violation = Some(format!("minimally tough split graph, {text}"));
            }
        }
        f
    }

    fn check_t11(&self) -> Finding {
        if !self.split() || !self.connected {
            return Finding::default();
        }
        let mut f = Finding::checked();
        f.instance = self.minimal_instance().map(|(_, text)| text);
        let recognized = recognize_split_min_tough(self.g);
        if recognized != self.minimal() {
            f.violation = Some(format!(
                "recognizer {} but brute force {}",
                option_text(recognized),
                option_text(self.minimal())
            ));
        }
        f
    }

    fn check_t12(&self) -> Finding {
        if !self.claw_free() || !self.connected || self.g.is_complete() {
            return Finding::default();
        }
        let mut f = Finding::checked();
        let kappa = vertex_connectivity(self.g).value();
        let tau = self.tau();
        let doubled = tau.finite().map(|t| t * Rational::from_integer(2));
        if doubled != Some(Rational::from_integer(kappa as u64)) {
            f.violation = Some(format!("tau={tau} but kappa={kappa}"));
        } else if clawfree_toughness(self.g, false).ok() != Some(tau) {
            f.violation = Some(format!("kappa/2 shortcut disagrees with tau={tau}"));
        }
        f
    }

    fn check_t16(&self) -> Finding {
        if !self.claw_free() {
            return Finding::default();
        }
        let mut f = Finding::checked();
        let one = Some(ratio(1, 1));
        let brute = self.minimal() == one;
        let recognized = recognize_clawfree_min_tough(self.g) == one;
        if brute {
            f.instance = Some(self.describe(ratio(1, 1)));
        }
        if brute != recognized {
            f.violation = Some(format!("cycle test {recognized} but minimally 1-tough {brute}"));
        }
        f
    }

    fn check_t17(&self) -> Finding {
        if !self.claw_free() || !self.connected {
            return Finding::default();
        }
        let mut f = Finding::checked();
        let brute = self.minimal() == Some(ratio(1, 2));
        let recognized = recognize_clawfree_half(self.g).is_some();
        if brute {
            f.instance = Some(self.describe(ratio(1, 2)));
        }
        if brute != recognized {
            f.violation = Some(format!("tree construction {recognized} but minimally 1/2-tough {brute}"));
        }
        f
    }

    fn check_c18(&self) -> Finding {
        if !self.twok2_free() || self.g.order() > CUTSET_SCAN_MAX_N {
            return Finding::default();
        }
        let mut f = Finding::checked();
        for s in subsets_by_size(self.g.vertices()) {
            let comps = components(self.g, s);
            let large = comps.sizes().iter().filter(|&&k| k >= 2).count();
            if comps.count() >= 2 && large > 1 {
                f.violation = Some(format!("cutset {s} leaves {large} components with at least two vertices"));
                break;
            }
        }
        f
    }

    fn check_l19(&self) -> Finding {
        let Some((t, text)) = self.minimal_instance().filter(|_| self.twok2_free()) else {
            return Finding::default();
        };
        let bad: Vec<String> = self
            .non_bridges()
            .filter_map(|e| match twok2_witness_unchecked(self.g, t, e) {
                Ok(w) if verify_edge_witness(self.g, &w) => None,
                Ok(w) => Some(format!("edge {e}: set {} does not certify", w.set)),
                Err(err) => Some(format!("edge {e}: {err}")),
            })
            .collect();
        Finding { checked: true, instance: Some(text), violation: summarize(bad) }
    }

    fn check_l14(&self) -> Finding {
        let half = ratio(1, 2);
        if !self.claw_free() || self.minimal() != Some(half) {
            return Finding::default();
        }
        let bad: Vec<String> = self
            .g
            .edges()
            .filter_map(|e| match clawfree_half_witness_unchecked(self.g, e) {
                Ok(w) if w.set.len() <= 1 && verify_edge_witness(self.g, &w) => None,
                Ok(w) => Some(format!("edge {e}: set {} fails", w.set)),
                Err(err) => Some(format!("edge {e}: {err}")),
            })
            .collect();
        Finding { checked: true, instance: Some(self.describe(half)), violation: summarize(bad) }
    }

    fn check_c1(&self) -> Finding {
        let Some((t, text)) = self.minimal_instance() else {
            return Finding::default();
        };
        let bad: Vec<String> = self
            .g
            .edges()
            .filter_map(|e| match edge_witness_unchecked(self.g, t, e) {
                Ok(w) if verify_edge_witness(self.g, &w) => None,
                Ok(w) => Some(format!("edge {e}: set {} does not certify", w.set)),
                Err(err) => Some(format!("edge {e}: {err}")),
            })
            .collect();
        Finding { checked: true, instance: Some(text), violation: summarize(bad) }
    }

    fn check_t20(&self) -> Finding {
        if !self.twok2_free() || !self.connected {
            return Finding::default();
        }
        let mut f = Finding::checked();
        f.instance = self.minimal_instance().map(|(_, text)| text);
        let mut bad = Vec::new();
        for e in self.non_bridges() {
            let h = match split_expand(self.g, e) {
                Ok(h) => h,
                Err(err) => {
                    bad.push(format!("edge {e}: {err}"));
                    continue;
                }
            };
            if !is_split(&h).verdict() {
                bad.push(format!("edge {e}: expansion is not split"));
            }
            let expanded = toughness(&h).value;
            let deleted = toughness(&self.g.without_edge(e)).value;
            if expanded != deleted {
                bad.push(format!("edge {e}: tau(H)={expanded} but tau(G-e)={deleted}"));
            }
        }
        match recognize_2k2_min_tough(self.g) {
            Ok(r) if r == self.minimal() => {}
            Ok(r) => bad.push(format!(
                "recognizer {} but brute force {}",
                option_text(r),
                option_text(self.minimal())
            )),
            Err(err) => bad.push(format!("recognizer: {err}")),
        }
        f.violation = summarize(bad);
        f
    }

    fn check_kriesell(&self) -> Finding {
        let Some((t, text)) = self.minimal_instance() else {
            return Finding::default();
        };
        let delta = self.g.min_degree().unwrap_or(0);
        let target = ceil_double(t) as usize;
        Finding {
            checked: true,
            instance: Some(format!("{text} min_degree={delta} ceil_2t={target}")),
            violation: (delta != target).then(|| format!("no vertex of degree {target}, minimum degree {delta}")),
        }
    }

    fn check_deg1(&self) -> Finding {
        let half = ratio(1, 2);
        if !self.claw_free() || self.minimal() != Some(half) {
            return Finding::default();
        }
        let delta = self.g.min_degree().unwrap_or(0);
        Finding {
            checked: true,
            instance: Some(self.describe(half)),
            violation: (delta != 1).then(|| format!("minimum degree {delta}")),
        }
    }
}

pub(super) fn class_names(flags: [bool; 4]) -> String {
    let names: Vec<&str> = ["chordal", "split", "claw-free", "2K2-free"]
        .into_iter()
        .zip(flags)
        .filter_map(|(name, on)| on.then_some(name))
        .collect();
    if names.is_empty() {
        "-".to_string()
    } else {
        names.join(",")
    }
}
