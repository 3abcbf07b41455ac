//! Identity suite behind `weyl check`.

use num_bigint::BigInt;
use serde_json::{json, Value};
use weyl_core::combinatorics::{
    corollary2_sides, d_poly, d_tilde_poly, factorial, lemma100_sides, lemma1_sides, lemma3_sides,
};
use weyl_core::forms::{build_m, build_mtilde, build_n, frob, frob_pair_closed};
use weyl_core::scalar::rat;
use weyl_core::{MultiIndex, MultiPoly, WeylElement, WeylMonomial};

/// Suite identifiers accepted by `--lemma`, in run order.
pub const IDS: [&str; 9] = ["1", "2", "3", "4", "98", "100", "101", "102", "103"];

/// Range overrides; `None` keeps each check's default.
#[derive(Clone, Debug, Default)]
pub struct Ranges {
    pub max_n: Option<u32>,
    pub max_vars: Option<usize>,
    pub max_exp: Option<u32>,
    pub max_entry: Option<u32>,
    pub max_abc: Option<u32>,
    pub max_a: Option<u32>,
    pub max_k: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub id: &'static str,
    pub title: &'static str,
    pub range: String,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lemma": self.id,
            "title": self.title,
            "range": self.range,
            "cases": self.cases,
            "pass": self.passed(),
            "counterexample": self.counterexample,
        })
    }
}

struct Run {
    cases: u64,
    counterexample: Option<String>,
}

impl Run {
    fn new() -> Self {
        Run { cases: 0, counterexample: None }
    }

    /// Records one case; returns false once a counterexample is known.
    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        if !ok {
            self.counterexample = Some(describe());
        }
        ok
    }
}

fn title(id: &str) -> &'static str {
    match id {
        "1" => "(1+(1+x)(y+z+yz))^n expansion",
        "2" => "2^a-weighted binomial symmetry",
        "3" => "multi-index binomial symmetry",
        "4" => "closed form of the pairing on monomials",
        "98" => "det M^(a)(t) = t^(k(k+1)/2)",
        "100" => "binomial polynomial identity in t",
        "101" => "d = d~ polynomial identity",
        "102" => "det M~^(a,k) = x^(a(k+1)) (xy+z)^(k(k+1)/2)",
        "103" => "det N^(a,k) closed form",
        _ => "",
    }
}

/// Runs check `id`. Unknown identifiers return `None`.
pub fn run(id: &str, r: &Ranges) -> Option<Report> {
    let id = *IDS.iter().find(|&&k| k == id)?;
    let mut run = Run::new();
    let range = match id {
        "1" => {
            let max = r.max_n.unwrap_or(6);
            for n in 0..=max {
                let (l, rhs) = lemma1_sides(n);
                if !run.case(l == rhs, || format!("n={n}: lhs={l}, rhs={rhs}")) {
                    break;
                }
            }
            format!("n<={max}")
        }
        "2" => {
            let max = r.max_n.unwrap_or(8);
            'outer: for n in 0..=max {
                for a in 0..=n {
                    for b in 0..=n {
                        let (l, rhs) = corollary2_sides(n, a, b);
                        if !run.case(l == rhs, || format!("n={n} a={a} b={b}: lhs={l}, rhs={rhs}")) {
                            break 'outer;
                        }
                    }
                }
            }
            format!("a,b<=n<={max}")
        }
        "3" => {
            let vars = r.max_vars.unwrap_or(2);
            let max = r.max_entry.unwrap_or(3);
            'outer: for n in 1..=vars {
                let top = MultiIndex::new(vec![max; n]);
                for al in top.box_below() {
                    for be in top.box_below() {
                        for th in top.box_below() {
                            let (l, rhs) = lemma3_sides(&al, &be, &th).expect("same arity");
                            if !run.case(l == rhs, || format!("alpha={al} beta={be} theta={th}: lhs={l}, rhs={rhs}")) {
                                break 'outer;
                            }
                        }
                    }
                }
            }
            format!("1<=n<={vars}, entries<={max}")
        }
        "4" => {
            let vars = r.max_vars.unwrap_or(2);
            let max = r.max_exp.unwrap_or(4);
            'outer: for n in 1..=vars {
                let monos = monomials(n, max);
                for x in &monos {
                    let xe = element(x);
                    for y in &monos {
                        let direct = frob(&xe, &element(y)).expect("same arity");
                        let closed = frob_pair_closed(x.alpha(), x.beta(), y.alpha(), y.beta()).expect("same arity");
                        if !run.case(direct == closed, || format!("X={x} Y={y}: T(X@Y)={direct}, closed={closed}")) {
                            break 'outer;
                        }
                    }
                }
            }
            format!("1<=n<={vars}, exponents<={max}")
        }
        "98" => {
            let (ma, mk) = (r.max_a.unwrap_or(3), r.max_k.unwrap_or(5));
            let t = MultiPoly::var(1, 0);
            'outer: for a in 0..=ma {
                for k in 0..=mk {
                    let d = build_m(a, k).det().expect("square");
                    let want = t.pow(k * (k + 1) / 2);
                    let names = ["t".to_string()];
                    if !run.case(d == want, || format!("a={a} k={k}: det={}", d.format_with(&names))) {
                        break 'outer;
                    }
                }
            }
            format!("a<={ma}, k<={mk}")
        }
        "100" => {
            let max = r.max_abc.unwrap_or(6);
            'outer: for a in 0..=max {
                for b in 0..=max {
                    for c in 0..=max {
                        let (l, rhs) = lemma100_sides(a, b, c);
                        let names = ["t".to_string()];
                        if !run.case(l == rhs, || {
                            format!("a={a} b={b} c={c}: lhs={}, rhs={}", l.format_with(&names), rhs.format_with(&names))
                        }) {
                            break 'outer;
                        }
                    }
                }
            }
            format!("a,b,c<={max}")
        }
        "101" => {
            let max = r.max_abc.unwrap_or(5);
            'outer: for a in 0..=max {
                for b in 0..=max {
                    for c in 0..=max {
                        let (l, rhs) = (d_poly(a, b, c), d_tilde_poly(a, b, c));
                        if !run.case(l == rhs, || format!("a={a} b={b} c={c}: d={l}, d~={rhs}")) {
                            break 'outer;
                        }
                    }
                }
            }
            format!("a,b,c<={max}")
        }
        "102" => {
            let (ma, mk) = (r.max_a.unwrap_or(3), r.max_k.unwrap_or(4));
            let x = MultiPoly::var(3, 0);
            let xy_z = &(&x * &MultiPoly::var(3, 1)) + &MultiPoly::var(3, 2);
            'outer: for a in 0..=ma {
                for k in 0..=mk {
                    let d = build_mtilde(a, k).det().expect("square");
                    let want = &x.pow(a * (k + 1)) * &xy_z.pow(k * (k + 1) / 2);
                    if !run.case(d == want, || format!("a={a} k={k}: det={d}")) {
                        break 'outer;
                    }
                }
            }
            format!("a<={ma}, k<={mk}")
        }
        "103" => {
            let (ma, mk) = (r.max_a.unwrap_or(4), r.max_k.unwrap_or(5));
            'outer: for a in 0..=ma {
                for k in 0..=mk {
                    let d = build_n(a, k).det().expect("square");
                    let want = n_det_closed(a, k);
                    let ok = d == want && d > BigInt::from(0);
                    if !run.case(ok, || format!("a={a} k={k}: det={d}, closed form={want}")) {
                        break 'outer;
                    }
                }
            }
            format!("a<={ma}, k<={mk}")
        }
        _ => unreachable!("id taken from IDS"),
    };
    Some(Report { id, title: title(id), range, cases: run.cases, counterexample: run.counterexample })
}

/// `(∏_{i≤k} i!) (∏_{j≤k} (a+j)!) 2^{k(k+1)/2}`.
pub fn n_det_closed(a: u32, k: u32) -> BigInt {
    let p: BigInt = (0..=k).map(|i| factorial(u64::from(i)) * factorial(u64::from(a + i))).product();
    p << (k * (k + 1) / 2)
}

/// All `x^α ∂^β` in `n` variables with exponents at most `max`.
pub fn monomials(n: usize, max: u32) -> Vec<WeylMonomial> {
    let top = MultiIndex::new(vec![max; n]);
    top.box_below()
        .flat_map(|a| top.box_below().map(move |b| WeylMonomial::new(a.clone(), b).expect("same arity")))
        .collect()
}

fn element(m: &WeylMonomial) -> WeylElement {
    WeylElement::from_monomial(m.clone(), rat(1)).expect("positive arity")
}
