//! Static strand diagrams. Strands sit at fixed columns, one letter per
//! band, caps above and below. A positive `σ_j` has the strand coming from
//! the upper right on top.

use std::fmt::Write;

use platcalc_core::plat::Plat;

const COL: usize = 4;

fn blank_row(m: usize) -> Vec<u8> {
    let mut row = vec![b' '; COL * (m - 1) + 1];
    for s in 0..m {
        row[COL * s] = b'|';
    }
    row
}

fn push_row(out: &mut String, row: &[u8], label: Option<&str>) {
    let mut line = String::from_utf8(row.to_vec()).expect("ascii");
    if let Some(l) = label {
        line.push_str("   ");
        line.push_str(l);
    }
    out.push_str(line.trim_end());
    out.push('\n');
}

pub fn ascii(p: &Plat) -> String {
    let m = p.strands();
    let mut out = String::new();
    let mut caps = vec![b' '; COL * (m - 1) + 1];
    for pair in 0..m / 2 {
        let x = 2 * COL * pair;
        caps[x + 1..x + COL].fill(b'_');
    }
    push_row(&mut out, &caps, None);
    push_row(&mut out, &blank_row(m), None);
    for &g in p.letters() {
        let x = COL * (g.unsigned_abs() as usize - 1);
        let mut top = blank_row(m);
        top[x] = b' ';
        top[x + COL] = b' ';
        top[x + 1] = b'\\';
        top[x + COL - 1] = b'/';
        let mut mid = blank_row(m);
        mid[x] = b' ';
        mid[x + COL] = b' ';
        mid[x + COL / 2] = if g > 0 { b'/' } else { b'\\' };
        let mut bot = blank_row(m);
        bot[x] = b' ';
        bot[x + COL] = b' ';
        bot[x + 1] = b'/';
        bot[x + COL - 1] = b'\\';
        push_row(&mut out, &top, None);
        push_row(&mut out, &mid, Some(&format!("{g:+}")));
        push_row(&mut out, &bot, None);
    }
    let mut bottom = blank_row(m);
    for pair in 0..m / 2 {
        let x = 2 * COL * pair;
        bottom[x + 1..x + COL].fill(b'_');
    }
    push_row(&mut out, &bottom, None);
    out
}

const UNIT: usize = 40;
const MARGIN: usize = 30;

fn x_of(strand: usize) -> usize {
    MARGIN + UNIT * strand
}

pub fn svg(p: &Plat) -> String {
    let m = p.strands();
    let rows = p.crossing_count();
    let width = 2 * MARGIN + UNIT * (m - 1);
    let (top, bottom) = (MARGIN, MARGIN + UNIT * rows.max(1));
    let height = bottom + MARGIN;
    let r = UNIT / 2;
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    writeln!(
        out,
        "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>"
    )
    .unwrap();
    writeln!(
        out,
        "<g stroke=\"black\" stroke-width=\"3\" fill=\"none\" stroke-linecap=\"round\">"
    )
    .unwrap();
    for pair in 0..m / 2 {
        let (a, b) = (x_of(2 * pair), x_of(2 * pair + 1));
        writeln!(out, "<path d=\"M {a} {top} A {r} {r} 0 0 1 {b} {top}\"/>").unwrap();
        writeln!(
            out,
            "<path d=\"M {a} {bottom} A {r} {r} 0 0 0 {b} {bottom}\"/>"
        )
        .unwrap();
    }
    let line = |out: &mut String, x1: usize, y1: usize, x2: usize, y2: usize| {
        writeln!(
            out,
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>"
        )
        .unwrap();
    };
    if rows == 0 {
        for s in 0..m {
            line(&mut out, x_of(s), top, x_of(s), bottom);
        }
    }
    for (row, &g) in p.letters().iter().enumerate() {
        let j = g.unsigned_abs() as usize - 1;
        let y = top + UNIT * row;
        for s in (0..m).filter(|&s| s != j && s != j + 1) {
            line(&mut out, x_of(s), y, x_of(s), y + UNIT);
        }
        let (l, rr) = (x_of(j), x_of(j + 1));
        // over strand drawn whole, under strand broken around the centre
        let (over, under) = if g > 0 {
            ((rr, l), (l, rr))
        } else {
            ((l, rr), (rr, l))
        };
        line(&mut out, over.0, y, over.1, y + UNIT);
        let gap = UNIT / 3;
        let (ux1, ux2) = under;
        let at = |t: usize| -> usize {
            // point on the under strand a fraction t/UNIT of the way down
            if ux2 > ux1 {
                ux1 + t
            } else {
                ux1 - t
            }
        };
        line(&mut out, ux1, y, at(gap), y + gap);
        line(&mut out, at(UNIT - gap), y + UNIT - gap, ux2, y + UNIT);
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_layout() {
        let p = Plat::new(2, vec![2, -1]).unwrap();
        let expected = concat!(
            " ___     ___\n",
            "|   |   |   |\n",
            "|    \\ /    |\n",
            "|     /     |   +2\n",
            "|    / \\    |\n",
            " \\ /    |   |\n",
            "  \\     |   |   -1\n",
            " / \\    |   |\n",
            "|___|   |___|\n",
        );
        assert_eq!(ascii(&p), expected);
    }

    #[test]
    fn svg_is_deterministic_and_well_formed() {
        let p = Plat::new(2, vec![2, -3, 1]).unwrap();
        let a = svg(&p);
        assert_eq!(a, svg(&p));
        assert!(a.starts_with("<svg") && a.ends_with("</svg>\n"));
        assert_eq!(a.matches("<path").count(), 4);
        // per crossing: 2 straight strands, 1 over line, 2 under segments
        assert_eq!(a.matches("<line").count(), 3 * 5);
    }
}
