use std::sync::OnceLock;

use super::{Cell, Check, Claim, GridOverrides, Outcome, Param};
use crate::binsum::{
    binom_sum_closed, binom_sum_direct, congruence_check, corollary_identities, fib_weighted, lemma_dodd, Congruence,
    FibFamily, Root, Sign, Subscript, WeightedIdentity,
};
use crate::error::Result;
use crate::gfpow::{self, display, Reading};
use crate::partsum::{
    horadam_direct, horadam_s4n_minus1_corrected, horadam_sums, partial_sum_closed, partial_sum_direct,
    partial_sum_general_b, partial_sum_printed, pell_reflection, sn1_corrected, sn1_printed, HoradamVariant,
    PartialSum, PartialSumQuery,
};
use crate::polyrat::render::{render, render_poly, Style};
use crate::polyrat::RationalFunction;
use crate::qfield::{ratio, rational, Rational, RecurrenceSpec};

/// Specs the grids draw from, by name: `(name, a, b, u0, u1)`.
const SPECS: &[(&str, i64, i64, i64, i64)] = &[
    ("fibonacci", 1, 1, 0, 1),
    ("lucas", 1, 1, 2, 1),
    ("pell", 2, 1, 0, 1),
    ("pell-q", 2, 1, 1, 1),
    ("(1,2;0,1)", 1, 2, 0, 1),
    ("(3,-2;0,1)", 3, -2, 0, 1),
    ("(1,-3;0,1)", 1, -3, 0, 1),
    ("(3,-2;2,1)", 3, -2, 2, 1),
];

pub const SPEC_NAMES: [&str; 8] = {
    let mut out = [""; 8];
    let mut i = 0;
    while i < SPECS.len() {
        out[i] = SPECS[i].0;
        i += 1;
    }
    out
};

pub fn named_spec(name: &str) -> Option<RecurrenceSpec> {
    SPECS
        .iter()
        .find(|s| s.0 == name)
        .map(|&(_, a, b, u0, u1)| RecurrenceSpec::integers(a, b, u0, u1).expect("table specs are valid"))
}

fn spec_of(cell: &Cell) -> RecurrenceSpec {
    named_spec(cell.name("spec")).expect("grid names a known spec")
}

const ZERO_START: &[&str] = &["fibonacci", "pell", "(1,2;0,1)", "(3,-2;0,1)", "(1,-3;0,1)"];
const UNIT_B_ZERO_START: &[&str] = &["fibonacci", "pell"];
const ALL_SPECS: &[&str] = &[
    "fibonacci",
    "lucas",
    "pell",
    "pell-q",
    "(1,2;0,1)",
    "(3,-2;0,1)",
    "(1,-3;0,1)",
    "(3,-2;2,1)",
];
const PELL_PARAMS: &[(i64, i64)] = &[(1, 2), (1, 3), (2, 5)];

/// Cartesian product of the axes, in axis order.
fn product(axes: Vec<(&'static str, Vec<Param>)>) -> Vec<Cell> {
    let mut cells = vec![Vec::new()];
    for (key, values) in axes {
        cells = cells
            .into_iter()
            .flat_map(|prefix: Vec<(&'static str, Param)>| {
                values.iter().map(move |v| {
                    let mut next = prefix.clone();
                    next.push((key, v.clone()));
                    next
                })
            })
            .collect();
    }
    cells.into_iter().map(Cell::new).collect()
}

fn ints(range: impl IntoIterator<Item = i64>) -> Vec<Param> {
    range.into_iter().map(Param::Int).collect()
}

fn names(list: &[&'static str]) -> Vec<Param> {
    list.iter().map(|s| Param::Name(s)).collect()
}

fn rats(list: &[Rational]) -> Vec<Param> {
    list.iter().cloned().map(Param::Rat).collect()
}

fn pell_cells(max_n: u64) -> Vec<Cell> {
    PELL_PARAMS
        .iter()
        .flat_map(|&(p, q)| {
            (1..=max_n as i64).map(move |n| Cell::new(vec![("p", Param::Int(p)), ("q", Param::Int(q)), ("n", Param::Int(n))]))
        })
        .collect()
}

fn text(f: &RationalFunction<Rational>) -> String {
    render(f, Style::Text)
}

fn compare_fn(lhs: &RationalFunction<Rational>, rhs: &RationalFunction<Rational>) -> Check {
    Check::new(text(lhs), text(rhs), lhs == rhs)
}

struct Builder(Vec<Claim>);

impl Builder {
    fn add(
        &mut self,
        id: &'static str,
        description: &'static str,
        locus: &'static str,
        hypotheses: &'static [&'static str],
        grid: impl Fn(&GridOverrides) -> Vec<Cell> + Send + Sync + 'static,
        check: impl Fn(&Cell) -> Result<Outcome> + Send + Sync + 'static,
    ) {
        self.0.push(Claim { id, description, locus, hypotheses, grid: Box::new(grid), check: Box::new(check) });
    }
}

fn spec_r_grid(specs: &'static [&'static str], parity: Option<u32>, default_r: u32) -> impl Fn(&GridOverrides) -> Vec<Cell> {
    move |o| {
        let rs = (1..=o.r(default_r) as i64).filter(|r| parity.is_none_or(|p| r % 2 == p as i64));
        product(vec![("spec", names(specs)), ("r", ints(rs))])
    }
}

fn generating_functions(b: &mut Builder) {
    let claimed = |cell: &Cell| -> Result<Outcome> {
        let (spec, r) = (spec_of(cell), cell.int("r") as u32);
        let truth = gfpow::gf_power(&spec, r)?;
        let printed = gfpow::gf_power_claimed_as(&spec, r, Reading::Printed)?;
        let general = gfpow::gf_power_claimed_as(&spec, r, Reading::GeneralB)?;
        Ok(Outcome::printed(compare_fn(&printed, &truth)).with("general-b", compare_fn(&general, &truth)))
    };
    b.add(
        "thm1-odd",
        "generating function of U_n^r, r odd, paired partial fractions",
        "Theorem 1, odd case",
        &["r odd", "middle x restored in the denominator", "x^2 coefficient read as (-b)^r"],
        spec_r_grid(ALL_SPECS, Some(1), 7),
        claimed,
    );
    b.add(
        "thm1-even",
        "generating function of U_n^r, r even, paired partial fractions plus middle pole",
        "Theorem 1, even case",
        &["r even", "x^2 coefficient read as (-b)^r"],
        spec_r_grid(ALL_SPECS, Some(0), 8),
        claimed,
    );
    b.add(
        "cor1-u0",
        "generating function of U_n^r when U_0 = 0",
        "Corollary to Theorem 1",
        &["U_0 = 0"],
        spec_r_grid(ZERO_START, None, 8),
        |cell| {
            let (spec, r) = (spec_of(cell), cell.int("r") as u32);
            let truth = gfpow::gf_power(&spec, r)?;
            let printed = gfpow::gf_power_corollary_as(&spec, r, Reading::Printed)?;
            let general = gfpow::gf_power_corollary_as(&spec, r, Reading::GeneralB)?;
            Ok(Outcome::printed(compare_fn(&printed, &truth)).with("general-b", compare_fn(&general, &truth)))
        },
    );
    let spec_grid = |_: &GridOverrides| product(vec![("spec", names(ZERO_START))]);
    b.add("eq1", "U(1,x) = A^2 U_1 x / (1 - V_1 x - x^2)", "Eq. (1)", &["U_0 = 0"], spec_grid, |cell| {
        let spec = spec_of(cell);
        let truth = gfpow::gf_power(&spec, 1)?;
        Ok(Outcome::printed(compare_fn(&display::eq1(&spec), &truth))
            .with("unit-prefactor", compare_fn(&display::eq1_unit_prefactor(&spec), &truth)))
    });
    b.add(
        "eq2",
        "U(2,x) = -A^2 (V_2 + 2) x (x - 1) / ((x + 1)(x^2 - V_2 x + 1))",
        "Eq. (2)",
        &["U_0 = 0"],
        spec_grid,
        |cell| {
            let spec = spec_of(cell);
            Ok(Outcome::printed(compare_fn(&display::eq2(&spec), &gfpow::gf_power(&spec, 2)?)))
        },
    );
    b.add(
        "eq3",
        "U(3,x) = A^4 U_1 x ((a^2+2b) - 2a^2 b x - (a^2+2b) x^2) / ((1 - V_3 x - x^2)(1 + b V_1 x - x^2))",
        "Eq. (3)",
        &["U_0 = 0"],
        spec_grid,
        |cell| {
            let spec = spec_of(cell);
            let truth = gfpow::gf_power(&spec, 3)?;
            Ok(Outcome::printed(compare_fn(&display::eq3(&spec), &truth))
                .with("recombined", compare_fn(&display::eq3_recombined(&spec), &truth)))
        },
    );
    b.add(
        "eq3-den",
        "denominator of U(3,x) is (1 - V_3 x - x^2)(1 + b V_1 x - x^2)",
        "Eq. (3), denominator",
        &["U_0 = 0"],
        spec_grid,
        |cell| {
            let spec = spec_of(cell);
            let claimed = RationalFunction::from_poly(display::eq3_denominator(&spec));
            let truth = gfpow::gf_power(&spec, 3)?;
            let expect = RationalFunction::from_poly(truth.den().clone());
            Ok(Outcome::printed(Check::new(
                render_poly(claimed.num(), Style::Text),
                render_poly(expect.num(), Style::Text),
                claimed == expect,
            )))
        },
    );
}

fn pell_sums(b: &mut Builder) {
    let entries: [(&str, HoradamVariant, &str); 8] = [
        ("thm2-S4n", HoradamVariant::S4n, "S_{4n} = q_{2n}(p q_{2n-1} + q q_{2n}) + p - q"),
        ("thm2-S4n-2", HoradamVariant::S4nMinus2, "S_{4n-2} = q_{2n-1}(p q_{2n-2} + q q_{2n-1})"),
        ("thm2-S4n+1", HoradamVariant::S4nPlus1, "S_{4n+1} = q_{2n}(p q_{2n} + q q_{2n+1}) - q"),
        ("thm2-S4n-1", HoradamVariant::S4nMinus1, "S_{4n-1} = q_{2n}(p q_{2n-2} + q q_{2n-1}) - q"),
        ("thm2-S-4n", HoradamVariant::SNeg4n, "S_{-4n} = q_{2n}(-p q_{2n+2} + q q_{2n+1}) + 3p - q"),
        ("thm2-S-4n+2", HoradamVariant::SNeg4nPlus2, "S_{-4n+2} = q_{2n}(-p q_{2n} + q q_{2n-1}) + 2p"),
        ("thm2-S-4n+1", HoradamVariant::SNeg4nPlus1, "S_{-4n+1} = q_{2n}(p q_{2n+1} - q q_{2n}) + p"),
        ("thm2-S-4n-1", HoradamVariant::SNeg4nMinus1, "S_{-4n-1} = q_{2n+1}(p q_{2n+2} - q q_{2n+1}) + 2p - q"),
    ];
    for (id, variant, description) in entries {
        b.add(
            id,
            description,
            "Theorem 2 (generalized Pell partial sums)",
            &["P_1 = p, P_2 = q, P_{n+1} = 2P_n + P_{n-1}", "n >= 1"],
            |o| pell_cells(o.n(25)),
            move |cell| {
                let (p, q, n) = (cell.rat("p"), cell.rat("q"), cell.uint("n"));
                let direct = horadam_direct(&p, &q, variant, n);
                let printed = horadam_sums(&p, &q, variant, n)?;
                let mut out = Outcome::printed(Check::compare(&printed, &direct));
                if variant == HoradamVariant::S4nMinus1 {
                    out = out.with("constant-p", Check::compare(&horadam_s4n_minus1_corrected(&p, &q, n)?, &direct));
                }
                Ok(out)
            },
        );
    }
}

fn pointwise_x() -> Vec<Rational> {
    vec![ratio(1, 2), rational(2), rational(-3)]
}

fn show(s: &PartialSum) -> String {
    s.to_string()
}

fn partial_sums(b: &mut Builder) {
    let grid = |odd: bool| {
        move |o: &GridOverrides| {
            let rs = (1..=o.r(6) as i64).filter(|r| (r % 2 == 1) == odd);
            product(vec![
                ("spec", names(UNIT_B_ZERO_START)),
                ("r", ints(rs)),
                ("n", ints(0..=o.n(40) as i64)),
                ("x", rats(&pointwise_x())),
            ])
        }
    };
    let query = |cell: &Cell| PartialSumQuery::at(spec_of(cell), cell.uint("n"), cell.int("r") as u32, cell.rat("x"));
    b.add(
        "thm3-odd",
        "partial sum of U_i^r x^i, r odd, paired form with U and V terms",
        "Theorem 3, Eq. (4)",
        &["U_0 = 0", "b = 1", "r odd"],
        grid(true),
        move |cell| {
            let q = query(cell);
            Ok(Outcome::printed(Check::compare(&partial_sum_printed(&q)?, &partial_sum_direct(&q)?)))
        },
    );
    b.add(
        "thm3-even",
        "partial sum of U_i^r x^i, r even, paired V form plus middle geometric term",
        "Theorem 3, Eq. (5)",
        &["U_0 = 0", "b = 1", "r even"],
        grid(false),
        move |cell| {
            let q = query(cell);
            let direct = partial_sum_direct(&q)?;
            Ok(Outcome::printed(Check::compare(&partial_sum_printed(&q)?, &direct))
                .with("paired-geometric", Check::compare(&partial_sum_closed(&q)?.sum, &direct)))
        },
    );
    b.add(
        "cor3-sn1",
        "S_{n,1}(x) = x (U_1 - U_{n+1} x^n - U_n x^{n+2}) / (1 - V_1 x - x^2)",
        "Corollary to Theorem 3",
        &["U_0 = 0", "b = 1"],
        |o| product(vec![("spec", names(UNIT_B_ZERO_START)), ("n", ints(0..=o.n(32).min(32) as i64))]),
        |cell| {
            let (spec, n) = (spec_of(cell), cell.uint("n"));
            let direct = partial_sum_direct(&PartialSumQuery::symbolic(spec.clone(), n, 1))?;
            let direct = direct.function().expect("symbolic").clone();
            Ok(Outcome::printed(compare_fn(&sn1_printed(&spec, n)?, &direct))
                .with("exponents-n-n+1", compare_fn(&sn1_corrected(&spec, n)?, &direct)))
        },
    );
    b.add(
        "thm3-general-b",
        "partial sum of U_i^r x^i from the unpaired geometric sums over alpha^k beta^(r-k)",
        "Theorem 3, first line of the proof",
        &["U_0 = 0"],
        |o| {
            product(vec![
                ("spec", names(&["fibonacci", "(1,2;0,1)", "(3,-2;0,1)", "(1,-3;0,1)"])),
                ("r", ints(1..=o.r(4) as i64)),
                ("n", ints(0..=o.n(30) as i64)),
                ("x", rats(&[rational(1), rational(-1), rational(2), ratio(1, 2)])),
            ])
        },
        move |cell| {
            let q = query(cell);
            Ok(Outcome::printed(Check::new(
                show(&partial_sum_general_b(&q)?),
                show(&partial_sum_direct(&q)?),
                partial_sum_general_b(&q)? == partial_sum_direct(&q)?,
            )))
        },
    );
    b.add(
        "rem-pell-neg",
        "P_{-m} = -p (-1)^{m+2} p_{m+2} - q (-1)^{m+1} p_{m+1}",
        "Remark after Theorem 3",
        &["P_1 = p, P_2 = q"],
        |o| {
            PELL_PARAMS
                .iter()
                .flat_map(|&(p, q)| {
                    (0..=o.n(100) as i64)
                        .map(move |m| Cell::new(vec![("p", Param::Int(p)), ("q", Param::Int(q)), ("m", Param::Int(m))]))
                })
                .collect()
        },
        |cell| {
            let c = pell_reflection(&cell.rat("p"), &cell.rat("q"), cell.uint("m"));
            Ok(Outcome::printed(Check::compare(&c.lhs, &c.rhs)))
        },
    );
}

fn binomial_sums(b: &mut Builder) {
    b.add(
        "thm4",
        "sum C(n,i) U_i^r x^i = sum_k C(r,k) A^k (-B)^(r-k) (1 + alpha^k beta^(r-k) x)^n",
        "Theorem 4",
        &[],
        |o| {
            product(vec![
                ("spec", names(&["fibonacci", "pell", "(1,2;0,1)", "(3,-2;2,1)"])),
                ("r", ints(1..=o.r(6) as i64)),
                ("n", ints(0..=o.n(40) as i64)),
                ("x", rats(&[rational(1), rational(-1), rational(2), ratio(-1, 2)])),
            ])
        },
        |cell| {
            let (spec, r, n, x) = (spec_of(cell), cell.int("r") as u32, cell.uint("n"), cell.rat("x"));
            Ok(Outcome::printed(Check::compare(&binom_sum_closed(&spec, r, n, &x)?, &binom_sum_direct(&spec, r, n, &x))))
        },
    );
    let lemmas = [
        ("lemma5-alpha-minus", Root::Alpha, Sign::Minus, "alpha^{2s} - (-1)^s = sqrt(5) alpha^s F_s"),
        ("lemma5-beta-minus", Root::Beta, Sign::Minus, "beta^{2s} - (-1)^s = -sqrt(5) beta^s F_s"),
        ("lemma5-alpha-plus", Root::Alpha, Sign::Plus, "alpha^{2s} + (-1)^s = L_s alpha^s"),
        ("lemma5-beta-plus", Root::Beta, Sign::Plus, "beta^{2s} + (-1)^s = L_s beta^s"),
    ];
    for (id, root, sign, description) in lemmas {
        b.add(
            id,
            description,
            "Lemma 5, Eq. (6)",
            &["alpha, beta = (1 +- sqrt(5))/2"],
            |o| product(vec![("s", ints(0..=o.n(64) as i64))]),
            move |cell| {
                let c = lemma_dodd(cell.uint("s"), root, sign);
                Ok(Outcome::printed(Check::compare(&c.lhs, &c.rhs)))
            },
        );
    }
}

fn fibonacci_families(b: &mut Builder) {
    let families = [
        ("thm6-4r", FibFamily::FourR, "sum C(n,i) F_i^{4r} via L_{2r-k}^n L_{(2r-k)n}", "Theorem 6, Eq. (7)"),
        ("thm6-4r2-odd", FibFamily::FourR2Odd, "sum C(n,i) F_i^{4r+2}, n odd", "Theorem 6, Eq. (8)"),
        ("thm6-4r2-even", FibFamily::FourR2Even, "sum C(n,i) F_i^{4r+2}, n even", "Theorem 6, Eq. (9)"),
        ("thm9-4r-even", FibFamily::AltFourREven, "sum (-1)^i C(n,i) F_i^{4r}, n even", "Theorem 9, first case"),
        ("thm9-4r-odd", FibFamily::AltFourROdd, "sum (-1)^i C(n,i) F_i^{4r}, n odd", "Theorem 9, second case"),
        ("thm9-4r2", FibFamily::AltFourR2, "sum (-1)^i C(n,i) F_i^{4r+2}", "Theorem 9, third case"),
    ];
    for (id, family, description, locus) in families {
        let parity = match family {
            FibFamily::FourR2Odd | FibFamily::AltFourROdd => Some(1),
            FibFamily::FourR2Even | FibFamily::AltFourREven => Some(0),
            _ => None,
        };
        let r_min = if family.target(0).0 == 0 { 1 } else { 0 };
        b.add(
            id,
            description,
            locus,
            match parity {
                Some(1) => &["Fibonacci", "n odd"],
                Some(_) => &["Fibonacci", "n even"],
                None => &["Fibonacci"],
            },
            move |o| {
                let ns = (1..=o.n(50) as i64).filter(|n| parity.is_none_or(|p| n % 2 == p));
                product(vec![("r", ints(r_min..=o.r(3) as i64)), ("n", ints(ns))])
            },
            move |cell| {
                let (r, n) = (cell.int("r") as u32, cell.uint("n"));
                let direct = family.direct(r, n);
                let out = Outcome::printed(Check::compare(&fib_weighted(family, r, n, Subscript::Printed)?, &direct));
                Ok(match family {
                    FibFamily::AltFourREven | FibFamily::AltFourROdd => out.with(
                        "proof-line-subscript",
                        Check::compare(&fib_weighted(family, r, n, Subscript::ProofLine)?, &direct),
                    ),
                    _ => out,
                })
            },
        );
    }
}

fn corollary_lines(b: &mut Builder) {
    let lines = [
        ("cor7-1", WeightedIdentity::Fib, "sum C(n,i) F_i = F_{2n}", "Corollary 7, line 1"),
        ("cor7-2", WeightedIdentity::FibSquaredEven, "sum C(2n,i) F_i^2 = 5^{n-1} L_{2n}", "Corollary 7, line 2"),
        ("cor7-3", WeightedIdentity::FibSquaredOdd, "sum C(2n+1,i) F_i^2 = 5^n F_{2n+1}", "Corollary 7, line 3"),
        ("cor7-4", WeightedIdentity::FibCubed, "sum C(n,i) F_i^3 = (2^n F_{2n} + 3 F_n)/5", "Corollary 7, line 4"),
        (
            "cor7-5",
            WeightedIdentity::FibFourth,
            "sum C(n,i) F_i^4 = (3^n L_{2n} - 4(-1)^n L_n + 6 2^n)/25",
            "Corollary 7, line 5",
        ),
        ("cor10-1", WeightedIdentity::AltFib, "sum (-1)^i C(n,i) F_i = -F_n", "Corollary 10, line 1"),
        (
            "cor10-2",
            WeightedIdentity::AltFibSquared,
            "sum (-1)^i C(n,i) F_i^2 = ((-1)^n L_n - 2^{n+1})/5",
            "Corollary 10, line 2",
        ),
        (
            "cor10-3",
            WeightedIdentity::AltFibCubed,
            "sum (-1)^i C(n,i) F_i^3 = ((-2)^n F_n - 3 F_{2n})/5",
            "Corollary 10, line 3",
        ),
        (
            "cor10-4",
            WeightedIdentity::AltFibFourthEven,
            "sum (-1)^i C(n,i) F_i^4 = 5^{n/2-2}(L_{2n} - L_n), n even",
            "Corollary 10, line 4",
        ),
        (
            "cor10-5",
            WeightedIdentity::AltFibFourthOdd,
            "sum (-1)^i C(n,i) F_i^4 = -5^{(n+1)/2-2}(F_{2n} + 4F_n), n odd",
            "Corollary 10, line 5",
        ),
    ];
    for (id, identity, description, locus) in lines {
        let parity = identity.parity();
        b.add(
            id,
            description,
            locus,
            match parity {
                Some(true) => &["Fibonacci", "upper index odd"],
                Some(false) => &["Fibonacci", "upper index even"],
                None => &["Fibonacci"],
            },
            move |o| {
                let ns = (0..=o.n(100) as i64).filter(|n| parity.is_none_or(|odd| (n % 2 == 1) == odd));
                product(vec![("n", ints(ns))])
            },
            move |cell| {
                let n = cell.uint("n");
                let c = corollary_identities(identity, n)?;
                let mut out = Outcome::printed(Check::compare(&c.lhs, &c.rhs));
                if let Some(v) = identity.variant_rhs(n) {
                    let id = match identity {
                        WeightedIdentity::FibSquaredEven => "middle-term",
                        _ => "coefficient-4",
                    };
                    out = out.with(id, Check::compare(&c.lhs, &v));
                }
                Ok(out)
            },
        );
    }
}

fn congruences(b: &mut Builder) {
    let entries = [
        ("cor8-i", Congruence::TwoPowFib, "2^n F_{2n} + 3F_n = 0 mod 5", "Corollary 8 (i)"),
        ("cor8-ii", Congruence::ThreePowLucas, "3^n L_{2n} - 4(-1)^n L_n + 6 2^n = 0 mod 25", "Corollary 8 (ii)"),
        (
            "cor8-iii",
            Congruence::OddFamily,
            "sum_k C(4r+2,k) F_{2r+1-k}^n F_{n(2r+1-k)} = 0 mod 5^{4r+2-(n-1)/2}",
            "Corollary 8 (iii)",
        ),
        (
            "cor8-iv",
            Congruence::EvenFamily,
            "sum_k (-1)^k C(4r+2,k) F_{2r+1-k}^n L_{n(2r+1-k)} = 0 mod 5^{4r+2-n/2}",
            "Corollary 8 (iv)",
        ),
        (
            "cor8-v",
            Congruence::FourRFamily,
            "sum_k (-1)^{k(n+1)} C(4r,k) L_{2r-k}^n L_{(2r-k)n} + C(4r,2r) 2^n = 0 mod 5^{2r}",
            "Corollary 8 (v)",
        ),
        ("cor11-i", Congruence::LucasTwoPow, "(-1)^n L_n - 2^{n+1} = 0 mod 5", "Corollary 11 (i)"),
        ("cor11-ii", Congruence::FibNegTwoPow, "(-2)^n F_n - 3F_{2n} = 0 mod 5", "Corollary 11 (ii)"),
    ];
    for (id, claim, description, locus) in entries {
        let hypotheses: &'static [&'static str] = match claim {
            Congruence::OddFamily => &["n odd", "n <= 8r+3"],
            Congruence::EvenFamily => &["n even", "n <= 8r+2"],
            Congruence::FourRFamily => &["r >= 1"],
            _ => &[],
        };
        b.add(
            id,
            description,
            locus,
            hypotheses,
            move |o| {
                let max_n = o.n(100) as i64;
                if claim.uses_r() {
                    let r_min = if claim == Congruence::FourRFamily { 1 } else { 0 };
                    product(vec![("r", ints(r_min..=o.r(3) as i64)), ("n", ints(0..=max_n))])
                        .into_iter()
                        .filter(|c| claim.in_range(c.int("r") as u32, c.uint("n")))
                        .collect()
                } else {
                    product(vec![("n", ints(0..=max_n))])
                }
            },
            move |cell| {
                let r = if claim.uses_r() { cell.int("r") as u32 } else { 0 };
                let v = congruence_check(claim, r, cell.uint("n"))?;
                let lhs = v.value.to_string();
                let mut out = Outcome::printed(Check::new(
                    lhs.clone(),
                    format!("0 mod 5^{}", v.printed_exponent),
                    v.printed_holds,
                ));
                if let (Some(e), Some(holds)) = (v.implied_exponent, v.implied_holds) {
                    out = out.with("implied-exponent", Check::new(lhs, format!("0 mod 5^{e}"), holds));
                }
                Ok(out)
            },
        );
    }
}

/// Every registered claim, sorted by id.
pub fn claims() -> &'static [Claim] {
    static REGISTRY: OnceLock<Vec<Claim>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut b = Builder(Vec::new());
        generating_functions(&mut b);
        pell_sums(&mut b);
        partial_sums(&mut b);
        binomial_sums(&mut b);
        fibonacci_families(&mut b);
        corollary_lines(&mut b);
        congruences(&mut b);
        let mut all = b.0;
        all.sort_by_key(|c| c.id);
        all
    })
}

pub fn claim(id: &str) -> Option<&'static Claim> {
    claims().iter().find(|c| c.id == id)
}
