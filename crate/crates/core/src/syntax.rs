//! Text syntax for circle connected sums.
//!
//! ```text
//! expr := term (('#' | '#~') term)*
//! term := 'X(' int ')' | 'X(' int ',' int ')' | 'S2xRP3' | '*S2xRP3' | 'CP2xS1'
//!       | int '*(S2xS2)xS1'
//! ```
//!
//! `#~` sets the framing bit at that join. Whitespace is ignored everywhere; error
//! offsets are byte offsets into the original text.

use std::fmt;

use thiserror::Error;

use crate::algebra::{Block, FakeClass, ManifoldExpression};
use crate::bordism::Category;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}", ExpectedList(expected))]
    Syntax { offset: usize, expected: Vec<&'static str> },
    #[error("at byte {offset}: {message}")]
    Semantic { offset: usize, message: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Semantic { offset, .. } => *offset,
        }
    }
}

struct ExpectedList<'a>(&'a [&'static str]);

impl fmt::Display for ExpectedList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            [one] => f.write_str(one),
            many => write!(f, "one of {}", many.join(", ")),
        }
    }
}

const TERM_START: &[&str] = &["'X('", "'S2xRP3'", "'*S2xRP3'", "'CP2xS1'", "integer"];

/// A block as written, before the category is settled.
#[derive(Debug, Clone, Copy)]
enum RawTerm {
    X(i64),
    Xpq(i64, i64),
    S2xRp3,
    Star,
    Cp2xS1,
    Stack(i64),
}

struct Cursor {
    /// Non-whitespace characters with their byte offsets.
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Cursor { chars, pos: 0, end: text.len() }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Syntax { offset: self.offset(), expected: expected.to_vec() }
    }

    fn literal(&mut self, lit: &str, name: &'static str) -> Result<(), ParseError> {
        for c in lit.chars() {
            if !self.eat(c) {
                return Err(self.syntax(&[name]));
            }
        }
        Ok(())
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let start = self.offset();
        let negative = self.eat('-');
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return Err(self.syntax(&["integer"]));
        }
        let value: i64 = digits
            .parse()
            .map_err(|_| ParseError::Semantic { offset: start, message: format!("integer {digits} is too large") })?;
        Ok(if negative { -value } else { value })
    }

    fn term(&mut self) -> Result<(usize, RawTerm), ParseError> {
        let start = self.offset();
        let term = match self.peek() {
            Some('X') => {
                self.literal("X(", "'X('")?;
                let a = self.int()?;
                let term = if self.eat(',') { RawTerm::Xpq(a, self.int()?) } else { RawTerm::X(a) };
                if !self.eat(')') {
                    return Err(self.syntax(if matches!(term, RawTerm::X(_)) { &["','", "')'"] } else { &["')'"] }));
                }
                term
            }
            Some('S') => {
                self.literal("S2xRP3", "'S2xRP3'")?;
                RawTerm::S2xRp3
            }
            Some('*') => {
                self.literal("*S2xRP3", "'*S2xRP3'")?;
                RawTerm::Star
            }
            Some('C') => {
                self.literal("CP2xS1", "'CP2xS1'")?;
                RawTerm::Cp2xS1
            }
            Some(c) if c.is_ascii_digit() || c == '-' => {
                let k = self.int()?;
                self.literal("*(S2xS2)xS1", "'*(S2xS2)xS1'")?;
                RawTerm::Stack(k)
            }
            _ => return Err(self.syntax(TERM_START)),
        };
        Ok((start, term))
    }
}

fn semantic(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Semantic { offset, message: message.into() }
}

/// Parses an expression. With `category = None` the category is topological when a
/// `*S2xRP3` or two-argument `X(p,q)` term appears and smooth otherwise.
pub fn parse_expression(text: &str, category: Option<Category>) -> Result<ManifoldExpression, ParseError> {
    let mut cur = Cursor::new(text);
    let mut terms = vec![cur.term()?];
    let mut framings = Vec::new();
    while cur.peek().is_some() {
        if !cur.eat('#') {
            return Err(cur.syntax(&["'#'", "'#~'", "end of input"]));
        }
        framings.push(cur.eat('~'));
        terms.push(cur.term()?);
    }

    let top_only = terms.iter().find(|(_, t)| matches!(t, RawTerm::Star | RawTerm::Xpq(..)));
    let category = match (category, top_only) {
        (Some(Category::Smooth), Some((offset, t))) => {
            let what = if matches!(t, RawTerm::Star) { "*S2xRP3" } else { "X(p,q)" };
            return Err(semantic(*offset, format!("{what} is not allowed in a smooth context")));
        }
        (Some(c), _) => c,
        (None, Some(_)) => Category::Top,
        (None, None) => Category::Smooth,
    };

    let mut blocks = Vec::with_capacity(terms.len());
    for &(offset, term) in &terms {
        blocks.push(match term {
            RawTerm::X(q) => Block::FakeRp5(match category {
                Category::Smooth => FakeClass::smooth(q),
                Category::Top => FakeClass::top(0, q),
            }),
            RawTerm::Xpq(p, q) => {
                if !(0..=1).contains(&p) {
                    return Err(semantic(offset, format!("Kirby-Siebenmann entry must be 0 or 1, got {p}")));
                }
                Block::FakeRp5(FakeClass::top(p, q))
            }
            RawTerm::S2xRp3 => Block::S2xRp3,
            RawTerm::Star => Block::StarS2xRp3,
            RawTerm::Cp2xS1 => Block::Cp2xS1,
            RawTerm::Stack(k) => {
                let k = u32::try_from(k)
                    .ok()
                    .filter(|&k| k > 0)
                    .ok_or_else(|| semantic(offset, format!("(S2xS2)xS1 count must be positive, got {k}")))?;
                Block::S2xS2xS1(k)
            }
        });
    }

    if !blocks.iter().any(Block::is_z2) {
        return Err(semantic(0, "no block with fundamental group Z/2 (the composite would have π₁ = Z)"));
    }
    ManifoldExpression::new(category, blocks, framings).map_err(|e| semantic(0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{normalize, Family};
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        let e = parse_expression("X(3) # S2xRP3 # 2*(S2xS2)xS1", None).unwrap();
        assert_eq!(e.category(), Category::Smooth);
        assert_eq!(e.blocks(), [Block::FakeRp5(FakeClass::Smooth(3)), Block::S2xRp3, Block::S2xS2xS1(2)]);
        assert_eq!(e.framings(), [false, false]);

        let e = parse_expression("X(1) #~ X(1)", None).unwrap();
        assert_eq!(e.framings(), [true]);
        assert_eq!(normalize(&e).unwrap().q(), 0);

        let e = parse_expression("  X ( 1 ,5)#*S2 xRP3 ", None).unwrap();
        assert_eq!(e.category(), Category::Top);
        assert_eq!(e.blocks()[0], Block::FakeRp5(FakeClass::Top { ks: 1, q: 5 }));
    }

    #[test]
    fn category_handling() {
        let e = parse_expression("X(9)", Some(Category::Top)).unwrap();
        assert_eq!(e.blocks()[0], Block::FakeRp5(FakeClass::Top { ks: 0, q: 1 }));
        assert_eq!(parse_expression("X(-1)", None).unwrap().blocks()[0], Block::FakeRp5(FakeClass::Smooth(15)));
        let err = parse_expression("S2xRP3 # *S2xRP3", Some(Category::Smooth)).unwrap_err();
        assert!(matches!(err, ParseError::Semantic { offset: 9, .. }), "{err}");
        let sf = normalize(&parse_expression("*S2xRP3", None).unwrap()).unwrap();
        assert_eq!((sf.family(), sf.p()), (Family::S2xRp3, 1));
    }

    #[test]
    fn error_offsets() {
        let err = parse_expression("CP2xS1", None).unwrap_err();
        assert!(matches!(err, ParseError::Semantic { offset: 0, .. }));

        let err = parse_expression("X(1) # Y", None).unwrap_err();
        assert_eq!(err, ParseError::Syntax { offset: 7, expected: TERM_START.to_vec() });

        let err = parse_expression("X(1) S2xRP3", None).unwrap_err();
        assert_eq!(err.offset(), 5);

        let err = parse_expression("X(1", None).unwrap_err();
        assert_eq!(err, ParseError::Syntax { offset: 3, expected: vec!["','", "')'"] });

        let err = parse_expression("S2xRP4", None).unwrap_err();
        assert_eq!(err.offset(), 5);

        assert!(matches!(parse_expression("X(2,1)", None), Err(ParseError::Semantic { offset: 0, .. })));
        assert!(matches!(parse_expression("X(1) # 0*(S2xS2)xS1", None), Err(ParseError::Semantic { offset: 7, .. })));
        assert_eq!(parse_expression("", None).unwrap_err().offset(), 0);
        assert_eq!(parse_expression("X(1) #", None).unwrap_err().offset(), 6);
    }

    fn term_text(top: bool) -> impl Strategy<Value = String> {
        let mut options = vec![
            (-20i64..40).prop_map(|q| format!("X({q})")).boxed(),
            Just("S2xRP3".to_string()).boxed(),
            Just("CP2xS1".to_string()).boxed(),
            (1u32..6).prop_map(|k| format!("{k}*(S2xS2)xS1")).boxed(),
        ];
        if top {
            options.push(Just("*S2xRP3".to_string()).boxed());
            options.push((0i64..2, -10i64..20).prop_map(|(p, q)| format!("X({p},{q})")).boxed());
        }
        proptest::strategy::Union::new(options)
    }

    fn expression_text() -> impl Strategy<Value = (String, Category)> {
        any::<bool>().prop_flat_map(|top| {
            let category = if top { Category::Top } else { Category::Smooth };
            (
                Just("S2xRP3".to_string()),
                prop::collection::vec((any::<bool>(), term_text(top), 0usize..3), 0..6),
                0usize..7,
            )
                .prop_map(move |(z2, rest, insert_at)| {
                    let mut terms: Vec<(bool, String)> = rest.into_iter().map(|(f, t, _)| (f, t)).collect();
                    let at = insert_at.min(terms.len());
                    terms.insert(at, (false, z2));
                    let mut text = terms[0].1.clone();
                    for (framing, t) in &terms[1..] {
                        text.push_str(if *framing { " #~ " } else { "#" });
                        text.push_str(t);
                    }
                    (text, category)
                })
        })
    }

    proptest! {
        #[test]
        fn render_reparses((text, category) in expression_text()) {
            let e = parse_expression(&text, Some(category)).unwrap();
            let rendered = e.to_string();
            prop_assert_eq!(parse_expression(&rendered, Some(category)).unwrap(), e.clone());
            prop_assert_eq!(parse_expression(&rendered, Some(category)).unwrap().to_string(), rendered);
        }

        #[test]
        fn arbitrary_text_never_panics(text in "[X0-9(),#~*SCPRxS \\-]{0,30}") {
            let _ = parse_expression(&text, None);
        }
    }
}
