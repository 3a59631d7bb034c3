use alloc::string::String;
use alloc::vec::Vec;

/// Normalizes raw textbook text.
///
/// Paragraphs (separated by blank lines) are kept apart by `"\n\n"`; inside a
/// paragraph line breaks become single spaces, words hyphenated across a line
/// break are rejoined, whitespace runs collapse, and figure-caption lines
/// (`Fig. 3 ...`, `Figure 2 ...`) are dropped.
pub fn clean_text(raw: &str) -> String {
    let mut paragraphs: Vec<String> = Vec::new();
    let mut lines: Vec<&str> = Vec::new();
    for line in raw.lines() {
        let line = line.trim();
        if line.is_empty() {
            flush(&mut lines, &mut paragraphs);
        } else if !is_caption(line) {
            lines.push(line);
        }
    }
    flush(&mut lines, &mut paragraphs);
    paragraphs.join("\n\n")
}

fn flush(lines: &mut Vec<&str>, paragraphs: &mut Vec<String>) {
    if lines.is_empty() {
        return;
    }
    let mut joined = String::new();
    for line in lines.drain(..) {
        if rejoins_hyphen(&joined, line) {
            joined.pop();
        } else if !joined.is_empty() {
            joined.push(' ');
        }
        joined.push_str(line);
    }
    let collapsed = joined.split_whitespace().collect::<Vec<_>>().join(" ");
    // A caption split over two lines ("Fig.\n2 ...") only shows up once joined.
    if !collapsed.is_empty() && !is_caption(&collapsed) {
        paragraphs.push(collapsed);
    }
}

fn rejoins_hyphen(joined: &str, next: &str) -> bool {
    let mut tail = joined.chars().rev();
    tail.next() == Some('-')
        && tail.next().is_some_and(char::is_alphabetic)
        && next.chars().next().is_some_and(char::is_alphabetic)
}

/// `Fig.` or `Figure` (any case) followed by a number at the start of a line.
fn is_caption(line: &str) -> bool {
    let lower = line.trim_start().to_lowercase();
    let rest = ["figure", "fig."].iter().find_map(|prefix| lower.strip_prefix(prefix));
    rest.is_some_and(|rest| rest.trim_start().starts_with(|c: char| c.is_ascii_digit()))
}
