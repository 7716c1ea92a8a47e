/// Line-oriented log of elementary operations, used by `--trace`.
///
/// A disabled trace never formats anything.
#[derive(Debug, Default)]
pub struct Trace {
    lines: Option<Vec<String>>,
    depth: usize,
}

impl Trace {
    pub fn disabled() -> Self {
        Trace { lines: None, depth: 0 }
    }

    pub fn enabled() -> Self {
        Trace { lines: Some(Vec::new()), depth: 0 }
    }

    pub fn is_enabled(&self) -> bool {
        self.lines.is_some()
    }

    pub fn emit(&mut self, line: impl FnOnce() -> String) {
        if let Some(lines) = &mut self.lines {
            lines.push(format!("{}{}", "  ".repeat(self.depth), line()));
        }
    }

    pub(crate) fn push(&mut self) {
        self.depth += 1;
    }

    pub(crate) fn pop(&mut self) {
        self.depth -= 1;
    }

    pub fn lines(&self) -> &[String] {
        self.lines.as_deref().unwrap_or(&[])
    }

    pub fn into_lines(self) -> Vec<String> {
        self.lines.unwrap_or_default()
    }
}
