use std::fmt::Write as _;
use std::io::{self, Write};

use num_complex::Complex64;

use super::{BoundingBox, GridSpec, RasterGrid};
use crate::error::{Error, Result};
use crate::numfmt::g17;
use crate::regions::Disk;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImageFormat {
    /// Binary P5, one byte per cell: 255 member, 0 not.
    Pgm,
    /// `re,im,member`, one line per cell center, row-major.
    Csv,
    Svg,
}

/// Disk outlines and point markers drawn on top of SVG output.
#[derive(Clone, Debug, Default)]
pub struct Overlay {
    pub disks: Vec<Disk>,
    pub markers: Vec<Complex64>,
}

/// One filled raster layer of an SVG picture.
#[derive(Clone, Debug)]
pub struct SvgLayer<'a> {
    pub grid: &'a RasterGrid,
    pub fill: &'a str,
    pub label: &'a str,
}

struct Counting<'a, W> {
    inner: &'a mut W,
    written: usize,
}

impl<W: Write> Write for Counting<'_, W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.written += n;
        Ok(n)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

/// Writes `grid` in `format`; `overlay` is only used for SVG. Returns bytes written.
pub fn emit<W: Write>(grid: &RasterGrid, format: ImageFormat, overlay: &Overlay, sink: &mut W) -> Result<usize> {
    match format {
        ImageFormat::Pgm => write_pgm(grid, sink),
        ImageFormat::Csv => write_csv(grid, sink),
        ImageFormat::Svg => write_svg(
            &[SvgLayer {
                grid,
                fill: "#3b6ea8",
                label: "region",
            }],
            overlay,
            sink,
        ),
    }
}

fn write_pgm<W: Write>(grid: &RasterGrid, sink: &mut W) -> Result<usize> {
    let mut out = Counting {
        inner: sink,
        written: 0,
    };
    write!(out, "P5\n{} {}\n255\n", grid.cols(), grid.rows())?;
    let body: Vec<u8> = grid.cells().map(|m| if m { 255 } else { 0 }).collect();
    out.write_all(&body)?;
    out.flush()?;
    Ok(out.written)
}

fn write_csv<W: Write>(grid: &RasterGrid, sink: &mut W) -> Result<usize> {
    let mut out = Counting {
        inner: sink,
        written: 0,
    };
    let mut buf = io::BufWriter::new(&mut out);
    buf.write_all(b"re,im,member\n")?;
    let spec = grid.spec();
    for row in 0..grid.rows() {
        for col in 0..grid.cols() {
            let z = spec.cell_center(col, row);
            writeln!(buf, "{},{},{}", g17(z.re), g17(z.im), u8::from(grid.get(col, row)))?;
        }
    }
    buf.flush()?;
    drop(buf);
    Ok(out.written)
}

/// Reads a binary P5 raster back onto `bbox`. Any nonzero byte is a member.
pub fn parse_pgm(bytes: &[u8], bbox: BoundingBox) -> Result<RasterGrid> {
    let bad = |m: &str| Error::InvalidRaster(m.to_string());
    let mut pos = 0;
    let mut fields = Vec::with_capacity(4);
    while fields.len() < 4 {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos < bytes.len() && bytes[pos] == b'#' {
            while pos < bytes.len() && bytes[pos] != b'\n' {
                pos += 1;
            }
            continue;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(bad("truncated PGM header"));
        }
        fields.push(std::str::from_utf8(&bytes[start..pos]).map_err(|_| bad("non-ASCII PGM header"))?);
    }
    if fields[0] != "P5" {
        return Err(bad("not a binary PGM (P5)"));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad("malformed PGM header number"));
    let (cols, rows, maxval) = (num(fields[1])?, num(fields[2])?, num(fields[3])?);
    if maxval == 0 || maxval > 255 {
        return Err(bad("unsupported PGM maxval"));
    }
    // Exactly one whitespace byte separates the header from the body.
    pos += 1;
    let body = bytes.get(pos..).ok_or_else(|| bad("missing PGM body"))?;
    if body.len() != cols * rows {
        return Err(bad("PGM body length does not match its header"));
    }
    let spec = GridSpec::new(bbox, cols, rows)?;
    RasterGrid::from_cells(spec, body.iter().map(|&b| b != 0))
}

const MARGIN: f64 = 48.0;
const TICKS: usize = 5;

/// Plots `layers` (first at the bottom) with disk outlines, markers and
/// labelled axes. Every layer must share the first layer's grid.
///
/// Member cells are drawn as one `rect` per horizontal run of cells.
pub fn write_svg<W: Write>(layers: &[SvgLayer<'_>], overlay: &Overlay, sink: &mut W) -> Result<usize> {
    let first = layers
        .first()
        .ok_or_else(|| Error::InvalidArgument("SVG output needs at least one layer".into()))?;
    let spec = *first.grid.spec();
    if layers.iter().any(|l| *l.grid.spec() != spec) {
        return Err(Error::GridMismatch);
    }
    let bbox = spec.bbox;
    let (cols, rows) = (spec.cols as f64, spec.rows as f64);
    let px = |re: f64| MARGIN + (re - bbox.re_min) / spec.cell_width();
    let py = |im: f64| MARGIN + (bbox.im_max - im) / spec.cell_height();

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = cols + 2.0 * MARGIN,
        h = rows + 2.0 * MARGIN
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="100%" height="100%" fill="white"/>"#);

    for layer in layers {
        let _ = writeln!(
            s,
            r#"<g id="{}" fill="{}" fill-opacity="0.6" shape-rendering="crispEdges">"#,
            escape(layer.label),
            escape(layer.fill)
        );
        for row in 0..spec.rows {
            let mut col = 0;
            while col < spec.cols {
                if !layer.grid.get(col, row) {
                    col += 1;
                    continue;
                }
                let start = col;
                while col < spec.cols && layer.grid.get(col, row) {
                    col += 1;
                }
                let _ = writeln!(
                    s,
                    r#"<rect x="{}" y="{}" width="{}" height="1"/>"#,
                    MARGIN + start as f64,
                    MARGIN + row as f64,
                    col - start
                );
            }
        }
        let _ = writeln!(s, "</g>");
    }

    // Frame, axes through the origin when visible, ticks.
    let _ = writeln!(
        s,
        r#"<g fill="none" stroke="black" stroke-width="1"><rect x="{MARGIN}" y="{MARGIN}" width="{cols}" height="{rows}"/>"#
    );
    if bbox.im_min <= 0.0 && 0.0 <= bbox.im_max {
        let _ = writeln!(
            s,
            r#"<line x1="{MARGIN}" y1="{y}" x2="{x2}" y2="{y}" stroke-dasharray="4 3"/>"#,
            y = py(0.0),
            x2 = MARGIN + cols
        );
    }
    if bbox.re_min <= 0.0 && 0.0 <= bbox.re_max {
        let _ = writeln!(
            s,
            r#"<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{y2}" stroke-dasharray="4 3"/>"#,
            x = px(0.0),
            y2 = MARGIN + rows
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="10" fill="black">"#);
    for t in 0..=TICKS {
        let f = t as f64 / TICKS as f64;
        let re = bbox.re_min + f * bbox.width();
        let im = bbox.im_min + f * bbox.height();
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{y}" text-anchor="middle">{label}</text>"#,
            x = px(re),
            y = MARGIN + rows + 14.0,
            label = tick_label(re)
        );
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{y}" text-anchor="end">{label}i</text>"#,
            x = MARGIN - 4.0,
            y = py(im) + 3.0,
            label = tick_label(im)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">Re</text>"#,
        MARGIN + cols / 2.0,
        MARGIN + rows + 32.0
    );
    let _ = writeln!(
        s,
        r#"<text x="12" y="{}" text-anchor="middle">Im</text>"#,
        MARGIN + rows / 2.0
    );
    let _ = writeln!(s, "</g>");

    if !overlay.disks.is_empty() {
        let _ = writeln!(s, r#"<g fill="none" stroke-width="1.2">"#);
        for d in &overlay.disks {
            let stroke = match d.side {
                crate::matrix::Side::Alpha => "#b03a2e",
                crate::matrix::Side::Beta => "#1e8449",
            };
            let _ = writeln!(
                s,
                r#"<ellipse cx="{}" cy="{}" rx="{}" ry="{}" stroke="{stroke}"><title>{} disk {}: |z - ({})| &lt;= {}</title></ellipse>"#,
                px(d.center.re),
                py(d.center.im),
                d.radius / spec.cell_width(),
                d.radius / spec.cell_height(),
                d.side.name(),
                d.owner + 1,
                complex_label(d.center),
                g17(d.radius)
            );
        }
        let _ = writeln!(s, "</g>");
    }
    if !overlay.markers.is_empty() {
        let _ = writeln!(s, r#"<g stroke="black" stroke-width="1.5">"#);
        for z in &overlay.markers {
            let (x, y) = (px(z.re), py(z.im));
            let _ = writeln!(
                s,
                r#"<path d="M {} {} L {} {} M {} {} L {} {}"><title>{}</title></path>"#,
                x - 4.0,
                y - 4.0,
                x + 4.0,
                y + 4.0,
                x - 4.0,
                y + 4.0,
                x + 4.0,
                y - 4.0,
                complex_label(*z)
            );
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, "</svg>");

    sink.write_all(s.as_bytes())?;
    sink.flush()?;
    Ok(s.len())
}

fn tick_label(x: f64) -> String {
    let rounded = (x * 1000.0).round() / 1000.0;
    if rounded == 0.0 {
        "0".into()
    } else {
        format!("{rounded}")
    }
}

fn complex_label(z: Complex64) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", g17(z.re), g17(-z.im))
    } else {
        format!("{}+{}i", g17(z.re), g17(z.im))
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
