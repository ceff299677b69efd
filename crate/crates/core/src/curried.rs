//! The backtick dialect of curried lambda calculus.
//!
//! Tokens are whitespace separated: `` ` `` is prefix application, `^x`
//! introduces a binder and bare names are variables, predefined terms or
//! the primitives `S K I R Interpret`. `` ``^x B `` is the abstraction
//! binding `x` over `B`; `` `F A `` applies `F` to `A`:
//!
//! ```text
//! S = ``^x ``^y ``^z ``x z `y z
//! K = ``^x ``^y x
//! ```

use std::collections::HashMap;

use thiserror::Error;

use crate::term::{abs, app, Prim, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurriedError {
    #[error("dangling application: expected an operand at end of input")]
    DanglingApplication,
    #[error("binder ^{0} outside of an abstraction")]
    StrayBinder(String),
    #[error("unbound name `{0}`")]
    UnboundName(String),
    #[error("unexpected trailing input starting at token {0:?}")]
    TrailingInput(String),
    #[error("empty binder name")]
    EmptyBinder,
    #[error("cannot print an open term")]
    OpenTerm,
}

/// A lambda term with named variables, the input form of bracket abstraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedTerm {
    Var(String),
    Lam(String, Box<NamedTerm>),
    App(Box<NamedTerm>, Box<NamedTerm>),
    Prim(Prim),
}

impl NamedTerm {
    pub fn var(name: &str) -> Self {
        NamedTerm::Var(name.to_string())
    }

    pub fn lam(name: &str, body: NamedTerm) -> Self {
        NamedTerm::Lam(name.to_string(), Box::new(body))
    }

    pub fn app(f: NamedTerm, a: NamedTerm) -> Self {
        NamedTerm::App(Box::new(f), Box::new(a))
    }

    /// True when `name` occurs free.
    pub fn mentions(&self, name: &str) -> bool {
        match self {
            NamedTerm::Var(v) => v == name,
            NamedTerm::Prim(_) => false,
            NamedTerm::Lam(x, b) => x != name && b.mentions(name),
            NamedTerm::App(f, a) => f.mentions(name) || a.mentions(name),
        }
    }

    pub fn has_lambda(&self) -> bool {
        match self {
            NamedTerm::Var(_) | NamedTerm::Prim(_) => false,
            NamedTerm::Lam(..) => true,
            NamedTerm::App(f, a) => f.has_lambda() || a.has_lambda(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Tick,
    Binder(String),
    Name(String),
}

fn tokenize(source: &str) -> Result<Vec<Token>, CurriedError> {
    let mut tokens = Vec::new();
    let mut chars = source.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '`' {
            chars.next();
            tokens.push(Token::Tick);
        } else {
            let binder = c == '^';
            if binder {
                chars.next();
            }
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_whitespace() || c == '`' || c == '^' {
                    break;
                }
                name.push(c);
                chars.next();
            }
            if binder {
                if name.is_empty() {
                    return Err(CurriedError::EmptyBinder);
                }
                tokens.push(Token::Binder(name));
            } else {
                tokens.push(Token::Name(name));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<NamedTerm, CurriedError> {
        match self.next() {
            None => Err(CurriedError::DanglingApplication),
            // Primitive names resolve after scope, in `to_de_bruijn`.
            Some(Token::Name(n)) => Ok(NamedTerm::Var(n)),
            Some(Token::Binder(x)) => Err(CurriedError::StrayBinder(x)),
            Some(Token::Tick) => {
                if let (Some(Token::Tick), Some(Token::Binder(x))) =
                    (self.tokens.get(self.pos), self.tokens.get(self.pos + 1))
                {
                    let x = x.clone();
                    self.pos += 2;
                    let body = self.expr()?;
                    return Ok(NamedTerm::Lam(x, Box::new(body)));
                }
                let f = self.expr()?;
                let a = self.expr()?;
                Ok(NamedTerm::app(f, a))
            }
        }
    }
}

/// Parses the dialect into a named term. Every name, primitive or not, is a
/// variable until [`to_de_bruijn`] resolves it.
pub fn parse_named(source: &str) -> Result<NamedTerm, CurriedError> {
    let mut p = Parser {
        tokens: tokenize(source)?,
        pos: 0,
    };
    let t = p.expr()?;
    if let Some(tok) = p.tokens.get(p.pos) {
        let shown = match tok {
            Token::Tick => "`".to_string(),
            Token::Binder(x) => format!("^{x}"),
            Token::Name(n) => n.clone(),
        };
        return Err(CurriedError::TrailingInput(shown));
    }
    Ok(t)
}

/// Converts a named term to de Bruijn form. Free names resolve through
/// `definitions` (which must be closed terms); anything else is an error.
pub fn to_de_bruijn(
    term: &NamedTerm,
    definitions: &HashMap<String, Term>,
) -> Result<Term, CurriedError> {
    fn go(
        t: &NamedTerm,
        scope: &mut Vec<String>,
        defs: &HashMap<String, Term>,
    ) -> Result<Term, CurriedError> {
        Ok(match t {
            NamedTerm::Var(name) => {
                if let Some(pos) = scope.iter().rposition(|x| x == name) {
                    Term::Var(scope.len() - 1 - pos)
                } else if let Some(d) = defs.get(name) {
                    d.clone()
                } else if let Some(p) = Prim::from_name(name) {
                    Term::Prim(p)
                } else {
                    return Err(CurriedError::UnboundName(name.clone()));
                }
            }
            NamedTerm::Prim(p) => Term::Prim(*p),
            NamedTerm::Lam(x, b) => {
                scope.push(x.clone());
                let body = go(b, scope, defs);
                scope.pop();
                abs(body?)
            }
            NamedTerm::App(f, a) => app(go(f, scope, defs)?, go(a, scope, defs)?),
        })
    }
    go(term, &mut Vec::new(), definitions)
}

/// Converts a de Bruijn term to named form. Binders at depth `d` are named
/// `binder_name(d)`; a free index `k` becomes `free{k}`.
pub fn to_named(term: &Term) -> NamedTerm {
    fn go(t: &Term, depth: usize) -> NamedTerm {
        match t {
            Term::Var(i) if *i < depth => NamedTerm::Var(binder_name(depth - 1 - i)),
            Term::Var(i) => NamedTerm::Var(format!("free{}", i - depth)),
            Term::Prim(p) => NamedTerm::Prim(*p),
            Term::Abs(b) => NamedTerm::Lam(binder_name(depth), Box::new(go(b, depth + 1))),
            Term::App(f, a) => NamedTerm::app(go(f, depth), go(a, depth)),
        }
    }
    go(term, 0)
}

/// `a`, `b`, …, `z`, `aa`, `ab`, …
pub fn binder_name(depth: usize) -> String {
    let mut n = depth;
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (n % 26) as u8);
        if n < 26 {
            break;
        }
        n = n / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}

/// Parses the dialect with the primitives as the only predefined names.
pub fn parse_curried(source: &str) -> Result<Term, CurriedError> {
    parse_curried_with(source, &HashMap::new())
}

pub fn parse_curried_with(
    source: &str,
    definitions: &HashMap<String, Term>,
) -> Result<Term, CurriedError> {
    to_de_bruijn(&parse_named(source)?, definitions)
}

pub fn print_named(term: &NamedTerm) -> String {
    let mut out = String::new();
    fn go(t: &NamedTerm, out: &mut String) {
        match t {
            NamedTerm::Var(v) => out.push_str(v),
            NamedTerm::Prim(p) => out.push_str(&p.name()),
            NamedTerm::Lam(x, b) => {
                out.push_str("``^");
                out.push_str(x);
                out.push(' ');
                go(b, out);
            }
            NamedTerm::App(f, a) => {
                out.push('`');
                go(f, out);
                out.push(' ');
                go(a, out);
            }
        }
    }
    go(term, &mut out);
    out
}

/// Canonical text of a closed term with binders named `a, b, c, …` by depth.
pub fn print_canonical(term: &Term) -> Result<String, CurriedError> {
    if !term.is_closed() {
        return Err(CurriedError::OpenTerm);
    }
    Ok(print_named(&to_named(term)))
}

/// Like [`print_canonical`] but total: free indices print as `free{k}`.
pub fn print_lenient(term: &Term) -> String {
    print_named(&to_named(term))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::normalize;
    use crate::term::*;

    #[test]
    fn parses_k() {
        assert_eq!(parse_curried("``^x ``^y x").unwrap(), k_lambda());
    }

    #[test]
    fn parses_i() {
        assert_eq!(parse_curried("``^x x").unwrap(), abs(var(0)));
    }

    #[test]
    fn parses_s() {
        assert_eq!(
            parse_curried("``^x ``^y ``^z ``x z `y z").unwrap(),
            s_lambda()
        );
    }

    #[test]
    fn predefined_names() {
        let mut defs = HashMap::new();
        let omega = parse_curried("``^x `x x").unwrap();
        defs.insert("omega".to_string(), omega.clone());
        let big = parse_curried_with("`omega omega", &defs).unwrap();
        defs.insert("Omega".to_string(), big.clone());
        let t = parse_curried_with("```K I Omega S", &defs).unwrap();
        assert_eq!(t, apply_all(K, [I, big, S]));
        assert_eq!(normalize(&t, 100), Some(S));
    }

    #[test]
    fn dangling_application() {
        assert_eq!(parse_curried("`K"), Err(CurriedError::DanglingApplication));
        assert_eq!(
            parse_curried("``^x"),
            Err(CurriedError::DanglingApplication)
        );
        assert_eq!(parse_curried(""), Err(CurriedError::DanglingApplication));
    }

    #[test]
    fn unbound_name() {
        assert_eq!(
            parse_curried("``^x y"),
            Err(CurriedError::UnboundName("y".into()))
        );
    }

    #[test]
    fn trailing_tokens() {
        assert!(matches!(
            parse_curried("K I"),
            Err(CurriedError::TrailingInput(_))
        ));
    }

    #[test]
    fn stray_binder() {
        assert!(matches!(
            parse_curried("`^x x"),
            Err(CurriedError::StrayBinder(_))
        ));
    }

    #[test]
    fn binder_shadows_primitive() {
        assert_eq!(parse_curried("``^S S").unwrap(), abs(var(0)));
    }

    #[test]
    fn canonical_names() {
        assert_eq!(print_canonical(&k_lambda()).unwrap(), "``^a ``^b a");
        assert_eq!(print_canonical(&S).unwrap(), "S");
        assert_eq!(print_canonical(&apply_all(K, [I, S])).unwrap(), "``K I S");
        assert_eq!(print_canonical(&var(0)), Err(CurriedError::OpenTerm));
    }

    #[test]
    fn binder_names_extend_past_z() {
        assert_eq!(binder_name(0), "a");
        assert_eq!(binder_name(25), "z");
        assert_eq!(binder_name(26), "aa");
        assert_eq!(binder_name(27), "ab");
    }
}
