use crate::derived::{self, DerivedObject, GradedObject};
use crate::error::{Error, Result};
use crate::frontend::parse::{Arg, Expr, Func};
use crate::frontend::value::Value;
use crate::group::FlcaGroup;
use crate::hom;
use crate::k0::{self, K0Class};
use crate::structure;

pub fn evaluate(e: &Expr) -> Result<Value> {
    match e {
        Expr::Group(g) => Ok(Value::Group(g.clone())),
        Expr::Sum(terms) => {
            let mut values = terms.iter().map(evaluate);
            let first = values.next().expect("sums have at least one term")?;
            values.try_fold(first, |acc, v| add(acc, v?))
        }
        Expr::Power(inner, k) => match evaluate(inner)? {
            Value::Group(g) => Ok(Value::Group(g.scale(*k))),
            Value::Derived(d) => Ok(Value::Derived(d.scale(*k))),
            Value::K0(x) => Ok(Value::K0(x.scale(*k as i64))),
            other => Err(Error::type_error("^", format!("cannot repeat a {} value", other.kind()))),
        },
        Expr::Shift(inner, n) => match evaluate(inner)? {
            Value::Group(g) => Ok(Value::Derived(DerivedObject::from(g).shift(*n))),
            Value::Derived(d) => Ok(Value::Derived(d.shift(*n))),
            other => Err(Error::type_error("shift", format!("cannot shift a {} value", other.kind()))),
        },
        Expr::Call(func, args) => call(*func, args),
    }
}

fn add(x: Value, y: Value) -> Result<Value> {
    match (x, y) {
        (Value::Group(a), Value::Group(b)) => Ok(Value::Group(a + b)),
        (Value::K0(a), Value::K0(b)) => Ok(Value::K0(a + b)),
        (Value::Group(a), Value::Derived(b)) => Ok(Value::Derived(DerivedObject::from(a) + b)),
        (Value::Derived(a), Value::Group(b)) => Ok(Value::Derived(a + DerivedObject::from(b))),
        (Value::Derived(a), Value::Derived(b)) => Ok(Value::Derived(a + b)),
        (a, b) => Err(Error::type_error("+", format!("cannot add {} and {}", a.kind(), b.kind()))),
    }
}

fn expr_arg(func: Func, arg: &Arg) -> Result<Value> {
    match arg {
        Arg::Expr(e) => evaluate(e),
        _ => Err(Error::Invariant(format!("{func}: parser produced a non-expression argument"))),
    }
}

fn group(func: Func, v: Value) -> Result<FlcaGroup> {
    match v {
        Value::Group(g) => Ok(g),
        other => Err(Error::type_error(func.name(), format!("expected a group, got {}", other.kind()))),
    }
}

fn graded(func: Func, v: Value) -> Result<GradedObject> {
    match v {
        Value::Group(g) => Ok(g.into()),
        Value::Derived(d) if d.contains_e() => Err(Error::NotSplit(func.name().into())),
        Value::Derived(d) => GradedObject::try_from(d),
        other => Err(Error::type_error(
            func.name(),
            format!("expected a group or a shifted sum of groups, got {}", other.kind()),
        )),
    }
}

fn k0_class(func: Func, v: Value) -> Result<K0Class> {
    match v {
        Value::K0(k) => Ok(k),
        Value::Group(g) => Ok(k0::k0_of(&g)),
        Value::Derived(d) => Ok(k0::k0_of_derived(&d)),
        other => Err(Error::type_error(func.name(), format!("expected a K0 class, got {}", other.kind()))),
    }
}

fn call(func: Func, args: &[Arg]) -> Result<Value> {
    let arg = |i: usize| expr_arg(func, &args[i]);
    Ok(match func {
        Func::Dual => match arg(0)? {
            Value::Group(g) => Value::Group(g.dual()),
            Value::Derived(d) => Value::Derived(derived::dual_derived(&d)),
            Value::K0(k) => Value::K0(k.involution()),
            other => return Err(Error::type_error("dual", format!("cannot dualize a {} value", other.kind()))),
        },
        Func::Hom => Value::Group(hom::hom(&group(func, arg(0)?)?, &group(func, arg(1)?)?)),
        Func::Tensor => Value::Group(hom::tensor(&group(func, arg(0)?)?, &group(func, arg(1)?)?)),
        Func::Rhom => Value::Derived(derived::rhom(&graded(func, arg(0)?)?, &graded(func, arg(1)?)?)),
        Func::Dtensor => Value::Derived(derived::derived_tensor(&graded(func, arg(0)?)?, &graded(func, arg(1)?)?)),
        Func::Ext => {
            let Arg::Int(n) = args[0] else {
                return Err(Error::Invariant("ext: parser produced a non-integer degree".into()));
            };
            Value::ExtR(derived::ext(n, &graded(func, arg(1)?)?, &graded(func, arg(2)?)?))
        }
        Func::K0 => Value::K0(k0_class(func, arg(0)?)?),
        Func::K0Mul => Value::K0(k0_class(func, arg(0)?)?.mul(&k0_class(func, arg(1)?)?)),
        Func::Ranks => Value::Profile(structure::ranks(&group(func, arg(0)?)?)),
        Func::Filt => Value::Filt(structure::filtration(&group(func, arg(0)?)?)),
        Func::PComp => {
            let Arg::Prime(p) = args[1] else {
                return Err(Error::Invariant("pcomp: parser produced a non-prime argument".into()));
            };
            Value::Group(structure::p_component(&group(func, arg(0)?)?, p))
        }
        Func::ResI => Value::Res(structure::resolve_injective(&group(func, arg(0)?)?)),
        Func::ResP => Value::Res(structure::resolve_projective(&group(func, arg(0)?)?)),
        Func::Is => {
            let Arg::Property(name) = &args[0] else {
                return Err(Error::Invariant("is: parser produced a non-property argument".into()));
            };
            let x = group(func, arg(1)?)?;
            let b = structure::has_property(name, &x)
                .ok_or_else(|| Error::Invariant(format!("is: unknown property {name} passed the parser")))?;
            Value::Bool(b)
        }
    })
}

/// Parses and evaluates.
pub fn eval_str(input: &str) -> Result<Value> {
    evaluate(&crate::frontend::parse(input)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &str) -> String {
        eval_str(s).unwrap().render_text()
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(eval_str("ext(1, T, Z)").unwrap(), Value::ExtR(derived::ExtResult::Group(crate::atom::Atom::Int.into())));
        assert_eq!(text("k0(R)"), "(1,1); default (0,0)");
        assert_eq!(eval_str("is(divisible, Z_5)").unwrap(), Value::Bool(false));
        assert_eq!(text("rhom(Q, Z)"), "E  (= [Q > Afin] in degrees 0,1)");
    }

    #[test]
    fn dispatch() {
        assert_eq!(text("dual(Z_5 + Q)"), "Sol + Q_5/Z_5");
        assert_eq!(text("hom(Z/4, Z/8)"), "Z/4");
        assert_eq!(text("tensor(Z/12, Z/18)"), "Z/2 + Z/3");
        assert_eq!(text("rhom(Z_5[1], T)"), "Q_5/Z_5[-1]");
        assert_eq!(text("rhom(Z + T, Z)"), "Z + Z[-1]");
        assert_eq!(text("dtensor(T, T)"), "T[1]");
        assert_eq!(text("dual(rhom(T, Z))"), "T[1]");
        assert_eq!(text("k0(T[1])"), "(0,-1); default (0,0)");
        assert_eq!(text("k0mul(k0(T), k0(T))"), "(0,-1); default (0,0)");
        assert_eq!(text("k0mul(T, T)"), "(0,-1); default (0,0)");
        assert_eq!(text("dual(k0(Z))"), "(0,1); default (0,0)");
        assert_eq!(text("k0(Z) + k0(T)"), "(1,1); default (0,0)");
        assert_eq!(text("ranks(Z/8)"), "z=0, s1=0; default (0,0); 2:(1,1)");
        assert_eq!(text("filt(Z + T + Q_5)"), "(T, Q_5, Z); R: 0; toptors: Q_5");
        assert_eq!(text("pcomp(Afin, 5)"), "Q_5");
        assert_eq!(text("resI(Z)"), "I: (R, T)");
        assert_eq!(text("resP(Sol)"), "P: (Q, A)");
        assert_eq!(text("ext(1, Q, Z)"), "coker(Q > Afin)");
        assert_eq!(text("ext(0, Q, Z)"), "0");
        assert_eq!(text("Z[1] + T"), "Z[1] + T");
        assert_eq!(text("(Z + T)^2[-1]"), "Z^2[-1] + T^2[-1]");
    }

    #[test]
    fn type_errors_name_the_operation() {
        let e = eval_str("hom(Z[1], T)").unwrap_err();
        assert!(matches!(&e, Error::Type { op, .. } if op == "hom"), "{e}");
        assert!(e.to_string().contains("derived"), "{e}");
        let e = eval_str("rhom(rhom(Q, Z), Z)").unwrap_err();
        assert_eq!(e, Error::NotSplit("rhom".into()));
        assert!(matches!(eval_str("ranks(k0(Z))").unwrap_err(), Error::Type { .. }));
        assert!(matches!(eval_str("Z + k0(Z)").unwrap_err(), Error::Type { .. }));
        assert!(matches!(eval_str("is(compact, Z) + Z").unwrap_err(), Error::Type { .. }));
    }
}
