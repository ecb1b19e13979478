//! Plain-text run reports.

use std::fmt::Write as _;
use std::time::Duration;

use sha2::{Digest, Sha256};

/// Accumulates result lines plus a digest of the command line and every input file read.
pub struct Report {
    echo: String,
    hasher: Sha256,
    lines: Vec<String>,
}

impl Report {
    pub fn new(echo: impl Into<String>) -> Self {
        let echo = echo.into();
        let mut hasher = Sha256::new();
        hasher.update(echo.as_bytes());
        Report { echo, hasher, lines: Vec::new() }
    }

    /// Folds an input (file contents or generator parameters) into the digest.
    pub fn input(&mut self, label: &str, bytes: &[u8]) {
        self.hasher.update([0u8]);
        self.hasher.update(label.as_bytes());
        self.hasher.update([0u8]);
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    /// Everything up to the timing line is a pure function of the inputs.
    pub fn render(&self, elapsed: Duration) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.echo).unwrap();
        writeln!(out, "inputs: sha256={:x}", self.hasher.clone().finalize()).unwrap();
        for line in &self.lines {
            writeln!(out, "{line}").unwrap();
        }
        writeln!(out, "time: {:.3} ms", elapsed.as_secs_f64() * 1e3).unwrap();
        out
    }
}

/// Shell-style echo of an argument list; arguments with spaces or quotes are single-quoted.
pub fn echo<S: AsRef<str>>(args: &[S]) -> String {
    let mut out = String::from("falsilab");
    for a in args {
        let a = a.as_ref();
        out.push(' ');
        if a.is_empty() || a.contains(|c: char| c.is_whitespace() || c == '\'' || c == '"') {
            out.push('\'');
            out.push_str(&a.replace('\'', r"'\''"));
            out.push('\'');
        } else {
            out.push_str(a);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_depends_on_inputs() {
        let mut a = Report::new("falsilab vc");
        let mut b = Report::new("falsilab vc");
        a.input("x.hyp", b"ground 1\nkind explicit\n1\n");
        b.input("x.hyp", b"ground 1\nkind explicit\n0\n");
        let d = Duration::ZERO;
        assert_ne!(a.render(d).lines().nth(1), b.render(d).lines().nth(1));
        let mut c = Report::new("falsilab vc");
        c.input("x.hyp", b"ground 1\nkind explicit\n1\n");
        assert_eq!(a.render(d), c.render(d));
    }

    #[test]
    fn echo_quotes() {
        assert_eq!(echo(&["vc", "--class", "a b.hyp"]), "falsilab vc --class 'a b.hyp'");
        assert_eq!(echo(&["popper", "--assign", ""]), "falsilab popper --assign ''");
    }
}
