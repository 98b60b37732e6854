//! Named group families: `Sym(n)`, `Alt(n)`, `Cyclic(n)`, `Dihedral(n)`,
//! `ElemAbelian(p,k)`, `Affine(p)`, `Product(A,B)`, `Wreath(A,B)`,
//! `CrownPower(L,k)`.

use crate::crowns::{crown_based_power, MonolithicGroup};
use crate::error::{Error, Result};
use crate::permcore::{direct_product, PermGroup, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Int(usize),
    Call(String, Vec<Expr>),
}

fn parse(s: &str) -> Result<Expr> {
    let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let e = parse_expr(&toks, &mut pos, s)?;
    if pos != toks.len() {
        return Err(Error::UnknownGroup(s.to_string()));
    }
    Ok(e)
}

fn parse_expr(t: &[char], pos: &mut usize, src: &str) -> Result<Expr> {
    let bad = || Error::UnknownGroup(src.to_string());
    let start = *pos;
    if t.get(*pos).is_some_and(char::is_ascii_digit) {
        while t.get(*pos).is_some_and(char::is_ascii_digit) {
            *pos += 1;
        }
        let v: String = t[start..*pos].iter().collect();
        return v.parse().map(Expr::Int).map_err(|_| bad());
    }
    while t.get(*pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
        *pos += 1;
    }
    if *pos == start {
        return Err(bad());
    }
    let name: String = t[start..*pos].iter().collect();
    let mut args = Vec::new();
    if t.get(*pos) == Some(&'(') {
        *pos += 1;
        loop {
            args.push(parse_expr(t, pos, src)?);
            match t.get(*pos) {
                Some(',') => *pos += 1,
                Some(')') => {
                    *pos += 1;
                    break;
                }
                _ => return Err(bad()),
            }
        }
    }
    Ok(Expr::Call(name, args))
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn cycle(n: usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("cycle")
}

fn transposition(n: usize, a: usize, b: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.swap(a, b);
    Permutation::from_images(v).expect("transposition")
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    let gens = if n <= 1 {
        Vec::new()
    } else if n == 2 {
        vec![transposition(2, 0, 1)]
    } else {
        vec![transposition(n, 0, 1), cycle(n)]
    };
    PermGroup::new(format!("Sym({n})"), n.max(1), gens)
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    let gens = (2..n)
        .map(|i| {
            Permutation::from_images(
                (0..n)
                    .map(|x| {
                        if x == 0 {
                            1
                        } else if x == 1 {
                            i
                        } else if x == i {
                            0
                        } else {
                            x
                        }
                    })
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(format!("Alt({n})"), n.max(1), gens)
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    let gens = if n <= 1 { Vec::new() } else { vec![cycle(n)] };
    PermGroup::new(format!("Cyclic({n})"), n.max(1), gens)
}

/// Order `2n` on `n` points.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::Precondition("Dihedral(n) needs n >= 3".into()));
    }
    let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
    PermGroup::new(format!("Dihedral({n})"), n, vec![cycle(n), refl])
}

/// `(C_p)^k` acting regularly on `p^k` points.
pub fn elem_abelian(p: usize, k: usize) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let size =
        p.checked_pow(k as u32).filter(|&s| s <= 1 << 16).ok_or_else(|| Error::cap("degree cap", "elementary abelian group too large"))?;
    let gens = (0..k)
        .map(|i| {
            let step = p.pow(i as u32);
            Permutation::from_images(
                (0..size)
                    .map(|x| {
                        let digit = (x / step) % p;
                        x - digit * step + ((digit + 1) % p) * step
                    })
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(format!("ElemAbelian({p},{k})"), size, gens)
}

/// `AGL(1,p)`: maps `x -> ax + b` on `p` points.
pub fn affine(p: usize) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let mut gens = vec![cycle(p)];
    if p > 2 {
        let root = (2..p).find(|&g| (1..p - 1).all(|e| (0..e).fold(1, |acc, _| acc * g % p) != 1)).expect("primitive root");
        gens.push(Permutation::from_images((0..p).map(|x| x * root % p).collect())?);
    }
    PermGroup::new(format!("Affine({p})"), p, gens)
}

/// Imprimitive wreath product: `deg(top)` copies of the base's domain.
pub fn wreath(base: &PermGroup, top: &PermGroup) -> Result<PermGroup> {
    let (a, b) = (base.degree(), top.degree());
    let total = a * b;
    let mut gens: Vec<Permutation> = base.generators().iter().map(|s| s.shifted(0, total)).collect();
    for t in top.generators() {
        gens.push(Permutation::from_images((0..total).map(|x| t.apply(x / a) * a + x % a).collect())?);
    }
    PermGroup::new(format!("Wreath({},{})", base.name(), top.name()), total, gens)
}

fn int(e: &Expr, src: &str) -> Result<usize> {
    match e {
        Expr::Int(v) => Ok(*v),
        _ => Err(Error::UnknownGroup(src.to_string())),
    }
}

fn build(e: &Expr, src: &str, lookup: &dyn Fn(&str) -> Option<PermGroup>) -> Result<PermGroup> {
    let Expr::Call(name, args) = e else {
        return Err(Error::UnknownGroup(src.to_string()));
    };
    let arity = |n: usize| if args.len() == n { Ok(()) } else { Err(Error::UnknownGroup(src.to_string())) };
    match name.as_str() {
        "Sym" => {
            arity(1)?;
            symmetric(int(&args[0], src)?)
        }
        "Alt" => {
            arity(1)?;
            alternating(int(&args[0], src)?)
        }
        "Cyclic" => {
            arity(1)?;
            cyclic(int(&args[0], src)?)
        }
        "Dihedral" => {
            arity(1)?;
            dihedral(int(&args[0], src)?)
        }
        "ElemAbelian" => {
            arity(2)?;
            elem_abelian(int(&args[0], src)?, int(&args[1], src)?)
        }
        "Affine" => {
            arity(1)?;
            affine(int(&args[0], src)?)
        }
        "Product" => {
            arity(2)?;
            let a = build(&args[0], src, lookup)?;
            let b = build(&args[1], src, lookup)?;
            Ok(direct_product(&a, &b)?.group.renamed(format!("Product({},{})", a.name(), b.name())))
        }
        "Wreath" => {
            arity(2)?;
            wreath(&build(&args[0], src, lookup)?, &build(&args[1], src, lookup)?)
        }
        "CrownPower" => {
            arity(2)?;
            let l = MonolithicGroup::new(build(&args[0], src, lookup)?)?;
            crown_based_power(&l, int(&args[1], src)?)
        }
        other if args.is_empty() => lookup(other).ok_or_else(|| Error::UnknownGroup(src.to_string())),
        _ => Err(Error::UnknownGroup(src.to_string())),
    }
}

/// Builds a group from a family expression; bare names are resolved with
/// `lookup`.
pub fn builtin_with(expr: &str, lookup: &dyn Fn(&str) -> Option<PermGroup>) -> Result<PermGroup> {
    build(&parse(expr)?, expr, lookup)
}

pub fn builtin(expr: &str) -> Result<PermGroup> {
    builtin_with(expr, &|_| None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        for (e, o) in [
            ("Sym(4)", 24),
            ("Sym(1)", 1),
            ("Alt(5)", 60),
            ("Alt(3)", 3),
            ("Cyclic(6)", 6),
            ("Dihedral(5)", 10),
            ("ElemAbelian(2,3)", 8),
            ("ElemAbelian(3,2)", 9),
            ("Affine(7)", 42),
            ("Product(Sym(3), Cyclic(2))", 12),
            ("Wreath(Cyclic(2),Sym(3))", 48),
            ("CrownPower(Sym(4),2)", 96),
            ("CrownPower(Alt(5),2)", 3600),
        ] {
            assert_eq!(builtin(e).unwrap().order(), o, "{e}");
        }
    }

    #[test]
    fn bad_names() {
        assert!(matches!(builtin("Foo(3)"), Err(Error::UnknownGroup(_))));
        assert!(builtin("Sym(3").is_err());
        assert!(builtin("ElemAbelian(4,2)").is_err());
        assert!(builtin("CrownPower(Cyclic(4),2)").is_err());
    }
}
