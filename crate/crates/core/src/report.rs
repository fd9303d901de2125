//! Batch reproduction of the verdict table behind `girthbound reproduce`.

use std::fmt;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use crate::bound::{check_bound, Answer};
use crate::families::{
    augmented_toroidal, c8pp, clebsch, coxeter, cycle, grotzsch, kneser, mycielski_level, petersen, projective_cube,
    wagner, x15, x16,
};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl std::str::FromStr for Level {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(format!("unknown level `{s}` (quick|full)")),
        }
    }
}

/// One verdict to reproduce.
pub struct Case {
    pub name: String,
    pub k: u32,
    pub expected: Answer,
    /// Skipped at the quick level.
    pub heavy: bool,
    pub build: fn(u32) -> Graph,
}

fn case(name: impl Into<String>, k: u32, expected: Answer, heavy: bool, build: fn(u32) -> Graph) -> Case {
    Case {
        name: name.into(),
        k,
        expected,
        heavy,
        build,
    }
}

/// The verdict table: known bounds answer YES; odd cycles and the
/// odd-girth gate case answer NO.
pub fn verdict_cases() -> Vec<Case> {
    use Answer::{No, Yes};
    let mut v = vec![
        case("c8pp", 2, Yes, false, |_| c8pp()),
        case("x15", 3, Yes, false, |_| x15()),
        case("x16", 3, Yes, false, |_| x16()),
        case("petersen", 2, Yes, false, |_| petersen()),
        case("grotzsch", 2, Yes, false, |_| grotzsch()),
        case("wagner", 2, Yes, false, |_| wagner()),
        case("clebsch", 2, Yes, false, |_| clebsch()),
        case("coxeter", 3, Yes, false, |_| coxeter()),
    ];
    for k in 1..=5 {
        v.push(case(format!("projective_cube {k}"), k, Yes, k >= 5, |k| {
            projective_cube(k).expect("small cube")
        }));
    }
    for k in 1..=5 {
        v.push(case(format!("kneser {} {k}", 2 * k + 1), k, Yes, false, |k| {
            kneser(2 * k + 1, k).expect("valid kneser")
        }));
    }
    for k in 1..=8 {
        v.push(case(format!("augmented_toroidal {k}"), k, Yes, false, |k| {
            augmented_toroidal(k as usize).expect("valid grid")
        }));
    }
    for k in 1..=10 {
        v.push(case(format!("mycielski_level {k}"), k, Yes, false, |k| {
            mycielski_level(k as usize).expect("valid level")
        }));
    }
    for k in 2..=4 {
        v.push(case(format!("cycle {}", 2 * k + 1), k, No, false, |k| {
            cycle(2 * k as usize + 1).expect("cycle")
        }));
    }
    v.push(case("cycle 9 at k=2", 2, No, false, |_| cycle(9).expect("cycle")));
    // Deleting a degree-2 vertex of this graph leaves C8++, so it bounds.
    v.push(case("petersen minus vertex 0", 2, Yes, false, |_| {
        petersen().without_vertex(0)
    }));
    v
}

#[derive(Clone, Debug)]
pub struct Row {
    pub name: String,
    pub k: u32,
    pub expected: Answer,
    /// `None` when the case timed out.
    pub observed: Option<Answer>,
    pub elapsed: Duration,
}

impl Row {
    pub fn pass(&self) -> bool {
        self.observed == Some(self.expected)
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub rows: Vec<Row>,
    pub skipped: Vec<String>,
}

impl RunReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(Row::pass)
    }
}

fn answer_str(a: Option<Answer>) -> &'static str {
    match a {
        Some(Answer::Yes) => "YES",
        Some(Answer::No) => "NO",
        None => "TIMEOUT",
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<28} {:>3} {:>8} {:>8} {:>10}  result",
            "case", "k", "expected", "observed", "seconds"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<28} {:>3} {:>8} {:>8} {:>10.3}  {}",
                r.name,
                r.k,
                answer_str(Some(r.expected)),
                answer_str(r.observed),
                r.elapsed.as_secs_f64(),
                if r.pass() { "pass" } else { "FAIL" }
            )?;
        }
        for s in &self.skipped {
            writeln!(f, "{s:<28} skipped at quick level")?;
        }
        writeln!(f, "overall: {}", if self.pass() { "PASS" } else { "FAIL" })
    }
}

/// Per-case limit at the quick level.
pub const QUICK_CASE_LIMIT: Duration = Duration::from_secs(60);

/// Runs the verdict table in order. At the quick level heavy cases are
/// skipped and each case is abandoned after [`QUICK_CASE_LIMIT`].
pub fn reproduce(level: Level) -> RunReport {
    let mut report = RunReport::default();
    for c in verdict_cases() {
        if level == Level::Quick && c.heavy {
            report.skipped.push(c.name);
            continue;
        }
        let (tx, rx) = mpsc::channel();
        let (build, k) = (c.build, c.k);
        let start = Instant::now();
        std::thread::spawn(move || {
            let answer = check_bound(&build(k), k).answer;
            let _ = tx.send(answer);
        });
        let observed = match level {
            Level::Quick => rx.recv_timeout(QUICK_CASE_LIMIT).ok(),
            Level::Full => rx.recv().ok(),
        };
        report.rows.push(Row {
            name: c.name,
            k: c.k,
            expected: c.expected,
            observed,
            elapsed: start.elapsed(),
        });
    }
    report
}
