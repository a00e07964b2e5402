//! Bundled ladders and arc templates.

use crate::ladder::Ladder;
use crate::template::ArcTemplate;

pub const F8_TEXT: &str = include_str!("../data/ladders/f8.txt");
pub const G3_TEXT: &str = include_str!("../data/ladders/g3.txt");
pub const NONSEPARATING_G2_TEXT: &str = include_str!("../data/templates/nonseparating_g2.tpl");
pub const SEPARATING_G2_TEXT: &str = include_str!("../data/templates/separating_g2.tpl");

/// Genus 2 pair meeting 12 times at distance 4.
pub fn f8() -> Ladder {
    Ladder::from_text(F8_TEXT).expect("bundled ladder is valid")
}

/// Genus 3 pair meeting 29 times at distance 4.
pub fn g3() -> Ladder {
    Ladder::from_text(G3_TEXT).expect("bundled ladder is valid")
}

/// Six weighted arc classes on the genus one surface with two boundary
/// circles obtained by cutting a genus 2 surface along a non-separating curve.
pub fn nonseparating_g2() -> ArcTemplate {
    NONSEPARATING_G2_TEXT.parse().expect("bundled template is valid")
}

/// Three weighted arc classes on each one-holed torus obtained by cutting a
/// genus 2 surface along a separating curve.
pub fn separating_g2() -> ArcTemplate {
    SEPARATING_G2_TEXT.parse().expect("bundled template is valid")
}

pub const BUILTIN_TEMPLATES: [&str; 2] = ["nonseparating-g2", "separating-g2"];

/// Source text of a bundled template.
pub fn builtin_template_text(name: &str) -> Option<&'static str> {
    match name {
        "nonseparating-g2" => Some(NONSEPARATING_G2_TEXT),
        "separating-g2" => Some(SEPARATING_G2_TEXT),
        _ => None,
    }
}

/// Look up a bundled template by name.
pub fn builtin_template(name: &str) -> Option<ArcTemplate> {
    builtin_template_text(name).map(|t| t.parse().expect("bundled template is valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::Verdict;
    use crate::gluing::enumerate_gluings;
    use crate::template::{pipeline, PipelineOptions};

    fn single_curve_verdicts(ladder: &Ladder) -> Vec<(usize, Verdict)> {
        enumerate_gluings(ladder, true)
            .unwrap()
            .into_iter()
            .filter(|g| g.single_curve)
            .map(|g| (g.offset, g.verdict.unwrap().verdict))
            .collect()
    }

    #[test]
    fn nonseparating_minimum_gives_four_distance_three_curves() {
        let t = nonseparating_g2();
        let (p, solutions) = t.constraints().unwrap().minimize().unwrap();
        assert_eq!((p, solutions), (8, vec![vec![2, 2, 2, 0, 2, 0]]));
        let found = single_curve_verdicts(&t.expand(&[2, 2, 2, 0, 2, 0]).unwrap());
        assert_eq!(found.len(), 4);
        assert!(found.iter().all(|(_, v)| *v == Verdict::Distance3));
    }

    #[test]
    fn nonseparating_realizes_f8() {
        let expanded = nonseparating_g2().expand(&[4, 2, 2, 1, 2, 1]).unwrap();
        assert!(f8().is_gluing_of(&expanded));
    }

    #[test]
    fn nonseparating_below_twelve_has_no_distance_four() {
        let records = pipeline(&nonseparating_g2(), 8..=9, &PipelineOptions::default()).unwrap();
        assert!(!records.is_empty());
        assert!(records.iter().all(|r| r.verdict == Verdict::Distance3));
    }

    #[test]
    fn separating_minimum() {
        let t = separating_g2();
        let (p, solutions) = t.constraints().unwrap().minimize().unwrap();
        assert_eq!((p, solutions), (12, vec![vec![2; 6]]));
        let found = single_curve_verdicts(&t.expand(&[2; 6]).unwrap());
        assert_eq!(found.len(), 6);
        assert!(found.iter().all(|(_, v)| *v == Verdict::Distance3));
    }

    #[test]
    fn builtin_names() {
        assert!(builtin_template("nonseparating-g2").is_some());
        assert!(builtin_template("separating-g2").unwrap().separating);
        assert!(builtin_template("torus").is_none());
    }
}
