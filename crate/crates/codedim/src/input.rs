//! Code and complex files.
//!
//! One codeword (or facet) per line, either as a binary string with vertex 1
//! first (`1100`) or as a brace set of 1-based labels (`{1,2}`). `#` starts a
//! comment. The first non-comment line may fix the ambient size as `n=<int>`;
//! without it, `n` is the length of the binary strings, or the largest label
//! when only brace sets appear.

use std::fs;
use std::path::Path;

use codedim_core::{Code, SimplicialComplex, VertexSet};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Word {
        line: usize,
        #[source]
        source: codedim_core::Error,
    },
    #[error("cannot determine n: no `n=` line and no codewords")]
    UnknownAmbient,
    #[error(transparent)]
    Core(#[from] codedim_core::Error),
}

/// Parsed word list with its ambient size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordList {
    pub n: usize,
    pub words: Vec<VertexSet>,
}

impl WordList {
    pub fn into_code(self) -> Result<Code, InputError> {
        Ok(Code::new(self.n, self.words)?)
    }

    /// Facet-list reading: the downward closure of the listed sets.
    pub fn into_complex(self) -> Result<SimplicialComplex, InputError> {
        Ok(SimplicialComplex::from_generators(self.n, self.words)?)
    }
}

/// Parses the code-file grammar.
pub fn parse_words(text: &str) -> Result<WordList, InputError> {
    let mut declared: Option<usize> = None;
    let mut tokens: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(value) = content
            .strip_prefix("n=")
            .or_else(|| content.strip_prefix("n ="))
        {
            if declared.is_some() || !tokens.is_empty() {
                return Err(InputError::Syntax {
                    line,
                    message: "`n=` must be the first non-comment line".into(),
                });
            }
            let n = value
                .trim()
                .parse::<usize>()
                .map_err(|_| InputError::Syntax {
                    line,
                    message: format!("bad vertex count {value:?}"),
                })?;
            declared = Some(n);
            continue;
        }
        tokens.push((line, content));
    }
    finish(declared, &tokens)
}

/// Parses an inline list of words separated by `;`.
pub fn parse_inline(list: &str, n: Option<usize>) -> Result<WordList, InputError> {
    let tokens: Vec<(usize, &str)> = list
        .split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| (1, t))
        .collect();
    finish(n, &tokens)
}

fn finish(declared: Option<usize>, tokens: &[(usize, &str)]) -> Result<WordList, InputError> {
    let n = match declared {
        Some(n) => n,
        None => infer_n(tokens)?,
    };
    let words = tokens
        .iter()
        .map(|&(line, t)| {
            VertexSet::parse(t, n).map_err(|source| InputError::Word { line, source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(WordList { n, words })
}

fn infer_n(tokens: &[(usize, &str)]) -> Result<usize, InputError> {
    if let Some(&(_, t)) = tokens.iter().find(|(_, t)| !t.starts_with('{')) {
        return Ok(t.len());
    }
    let mut max = None;
    for &(line, t) in tokens {
        let inner = t.trim_start_matches('{').trim_end_matches('}');
        for label in inner.split(',').map(str::trim).filter(|l| !l.is_empty()) {
            let v = label.parse::<usize>().map_err(|_| InputError::Syntax {
                line,
                message: format!("bad vertex label {label:?}"),
            })?;
            max = Some(max.map_or(v, |m: usize| m.max(v)));
        }
    }
    max.ok_or(InputError::UnknownAmbient)
}

pub fn read_words(path: &Path) -> Result<WordList, InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_words(&text)
}

pub fn read_code(path: &Path) -> Result<Code, InputError> {
    read_words(path)?.into_code()
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex, InputError> {
    read_words(path)?.into_complex()
}
