//! Deterministic SVG output for state-o-gram layouts.
//!
//! All coordinates are written with four decimals, so identical inputs give
//! byte-identical documents on every platform.

use std::f64::consts::PI;
use std::fmt::Write as _;

use thiserror::Error;

use crate::layout::StateogramLayout;

/// Vanishing kets shown before the list is elided.
pub const MAX_VANISHING_SHOWN: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SvgError {
    #[error("invalid render style: {0}")]
    InvalidStyle(String),
    #[error("a strip needs at least one layout")]
    EmptyStrip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderStyle {
    pub width_px: u32,
    pub height_px: u32,
    pub bar_width_px: u32,
    pub margin_px: u32,
    pub font_size_px: u32,
    pub show_vanishing_box: bool,
    pub title: Option<String>,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            width_px: 640,
            height_px: 400,
            bar_width_px: 14,
            margin_px: 10,
            font_size_px: 12,
            show_vanishing_box: true,
            title: None,
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<(), SvgError> {
        let fields = [
            ("width", self.width_px),
            ("height", self.height_px),
            ("bar width", self.bar_width_px),
            ("margin", self.margin_px),
            ("font size", self.font_size_px),
        ];
        if let Some((name, _)) = fields.iter().find(|(_, v)| *v == 0) {
            return Err(SvgError::InvalidStyle(format!("{name} must be positive")));
        }
        if self.bar_width_px * 8 >= self.width_px {
            return Err(SvgError::InvalidStyle(format!(
                "bar width {} must be less than width/8 ({})",
                self.bar_width_px,
                self.width_px as f64 / 8.0
            )));
        }
        let g = Geometry::new(self);
        if g.plot_right - g.plot_left <= 2.0 * self.margin_px as f64 || g.plot_bottom <= g.plot_top {
            return Err(SvgError::InvalidStyle(
                "plot area is empty for this size".to_string(),
            ));
        }
        Ok(())
    }
}

/// Pixel layout of one panel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    pub plot_left: f64,
    pub plot_right: f64,
    pub plot_top: f64,
    pub plot_bottom: f64,
    /// Inset between the plot frame and the x positions of ±π.
    pub angle_inset: f64,
    pub bar_width: f64,
    pub box_height: f64,
    pub panel_height: f64,
}

impl Geometry {
    pub fn new(style: &RenderStyle) -> Self {
        let font = style.font_size_px as f64;
        let margin = style.margin_px as f64;
        let box_height = if style.show_vanishing_box {
            font + 2.0 * margin
        } else {
            0.0
        };
        Self {
            plot_left: 4.0 * font,
            plot_right: style.width_px as f64 - margin,
            plot_top: margin + font + 6.0,
            plot_bottom: style.height_px as f64 - 2.0 * font - 4.0,
            angle_inset: margin,
            bar_width: style.bar_width_px as f64,
            box_height,
            panel_height: style.height_px as f64 + box_height,
        }
    }

    /// x pixel of a phase angle.
    pub fn x_of(&self, angle: f64) -> f64 {
        let (lo, hi) = self.angle_span();
        lo + (angle + PI) / (2.0 * PI) * (hi - lo)
    }

    pub fn angle_of(&self, x: f64) -> f64 {
        let (lo, hi) = self.angle_span();
        (x - lo) / (hi - lo) * 2.0 * PI - PI
    }

    /// y pixel of a cumulative probability.
    pub fn y_of(&self, p: f64) -> f64 {
        self.plot_bottom - p * (self.plot_bottom - self.plot_top)
    }

    pub fn p_of(&self, y: f64) -> f64 {
        (self.plot_bottom - y) / (self.plot_bottom - self.plot_top)
    }

    fn angle_span(&self) -> (f64, f64) {
        (self.plot_left + self.angle_inset, self.plot_right - self.angle_inset)
    }

    /// Left edge of a bar centered at `angle`, kept inside the plot frame.
    fn bar_left(&self, angle: f64) -> f64 {
        (self.x_of(angle) - self.bar_width / 2.0)
            .max(self.plot_left)
            .min(self.plot_right - self.bar_width)
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

const X_TICKS: [(f64, &str); 5] = [
    (-PI, "−π"),
    (-PI / 2.0, "−π/2"),
    (0.0, "0"),
    (PI / 2.0, "π/2"),
    (PI, "π"),
];

const Y_TICKS: [(f64, &str); 5] = [
    (0.0, "0%"),
    (0.25, "25%"),
    (0.5, "50%"),
    (0.75, "75%"),
    (1.0, "100%"),
];

fn header(out: &mut String, width: f64, height: f64, font: u32) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="{font}">"#,
        w = num(width),
        h = num(height),
    );
    let _ = writeln!(
        out,
        r##"<rect x="0.0000" y="0.0000" width="{}" height="{}" fill="#ffffff"/>"##,
        num(width),
        num(height)
    );
}

fn panel(out: &mut String, layout: &StateogramLayout, style: &RenderStyle, marker: Option<usize>) {
    let g = Geometry::new(style);
    let font = style.font_size_px as f64;
    let width = style.width_px as f64;

    if let Some(k) = marker {
        let _ = writeln!(
            out,
            r#"<text class="marker" x="{}" y="{}" font-weight="bold">({k})</text>"#,
            num(style.margin_px as f64),
            num(style.margin_px as f64 + font)
        );
    }
    if let Some(title) = &style.title {
        let _ = writeln!(
            out,
            r#"<text class="title" x="{}" y="{}" text-anchor="middle">{}</text>"#,
            num(width / 2.0),
            num(style.margin_px as f64 + font),
            escape(title)
        );
    }

    // axes
    out.push_str("<g class=\"axes\" stroke=\"#000000\" stroke-width=\"1\">\n");
    for (p, _) in Y_TICKS {
        let y = num(g.y_of(p));
        let _ = writeln!(
            out,
            r##"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="#dddddd"/>"##,
            num(g.plot_left),
            num(g.plot_right)
        );
    }
    let _ = writeln!(
        out,
        r#"<line x1="{l}" y1="{b}" x2="{r}" y2="{b}"/>"#,
        l = num(g.plot_left),
        r = num(g.plot_right),
        b = num(g.plot_bottom)
    );
    let _ = writeln!(
        out,
        r#"<line x1="{l}" y1="{t}" x2="{l}" y2="{b}"/>"#,
        l = num(g.plot_left),
        t = num(g.plot_top),
        b = num(g.plot_bottom)
    );
    for (angle, _) in X_TICKS {
        let x = num(g.x_of(angle));
        let _ = writeln!(
            out,
            r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#,
            num(g.plot_bottom),
            num(g.plot_bottom + 4.0)
        );
    }
    for (p, _) in Y_TICKS {
        let y = num(g.y_of(p));
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}"/>"#,
            num(g.plot_left - 4.0),
            num(g.plot_left)
        );
    }
    out.push_str("</g>\n<g class=\"tick-labels\" fill=\"#000000\">\n");
    for (angle, label) in X_TICKS {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle">{label}</text>"#,
            num(g.x_of(angle)),
            num(g.plot_bottom + 6.0 + font)
        );
    }
    for (p, label) in Y_TICKS {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end">{label}</text>"#,
            num(g.plot_left - 6.0),
            num(g.y_of(p) + font / 3.0)
        );
    }
    out.push_str("</g>\n");

    // bars
    out.push_str("<g class=\"bars\">\n");
    for bar in &layout.bars {
        let top = g.y_of(bar.top());
        let bottom = g.y_of(bar.y_offset);
        let _ = writeln!(
            out,
            r#"<rect class="bar" x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
            num(g.bar_left(bar.angle)),
            num(top),
            num(g.bar_width),
            num(bottom - top),
            bar.color.hex()
        );
    }
    out.push_str("</g>\n<g class=\"kets\" fill=\"#000000\">\n");
    for bar in &layout.bars {
        let left = g.bar_left(bar.angle);
        let top = g.y_of(bar.top());
        // to the right of the bar, unless that would leave the plot
        let (x, anchor) = if left + g.bar_width + 2.0 + 4.0 * font > g.plot_right {
            (left - 2.0, "end")
        } else {
            (left + g.bar_width + 2.0, "start")
        };
        let _ = writeln!(
            out,
            r#"<text class="ket" x="{}" y="{}" text-anchor="{anchor}">{}</text>"#,
            num(x),
            num(top + font * 0.8),
            escape(&bar.ket_label)
        );
    }
    out.push_str("</g>\n");

    if style.show_vanishing_box && !layout.vanishing.is_empty() {
        let mut text = layout
            .vanishing
            .iter()
            .take(MAX_VANISHING_SHOWN)
            .map(|k| escape(k))
            .collect::<Vec<_>>()
            .join(" ");
        if layout.vanishing.len() > MAX_VANISHING_SHOWN {
            let _ = write!(text, " … and {} more", layout.vanishing.len() - MAX_VANISHING_SHOWN);
        }
        let margin = style.margin_px as f64;
        let y = style.height_px as f64;
        let _ = writeln!(
            out,
            r##"<g class="vanishing"><rect x="{}" y="{}" width="{}" height="{}" fill="#d9d9d9" stroke="#a0a0a0"/><text x="{}" y="{}" fill="#404040">{text}</text></g>"##,
            num(g.plot_left),
            num(y),
            num(g.plot_right - g.plot_left),
            num(font + margin),
            num(g.plot_left + margin / 2.0),
            num(y + margin / 2.0 + font * 0.85),
        );
    }
}

/// One state-o-gram as a standalone SVG document.
pub fn render_svg(layout: &StateogramLayout, style: &RenderStyle) -> Result<String, SvgError> {
    style.validate()?;
    let g = Geometry::new(style);
    let mut out = String::new();
    header(&mut out, style.width_px as f64, g.panel_height, style.font_size_px);
    panel(&mut out, layout, style, None);
    out.push_str("</svg>\n");
    Ok(out)
}

/// Panels laid out left to right, numbered `(1)`, `(2)`, ….
pub fn render_strip(layouts: &[StateogramLayout], style: &RenderStyle) -> Result<String, SvgError> {
    if layouts.is_empty() {
        return Err(SvgError::EmptyStrip);
    }
    style.validate()?;
    let g = Geometry::new(style);
    let width = style.width_px as f64;
    let mut out = String::new();
    header(
        &mut out,
        width * layouts.len() as f64,
        g.panel_height,
        style.font_size_px,
    );
    for (k, layout) in layouts.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<g class="panel" transform="translate({},0)">"#,
            num(width * k as f64)
        );
        panel(&mut out, layout, style, Some(k + 1));
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
