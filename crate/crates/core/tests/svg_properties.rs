use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stateogram::svg::Geometry;
use stateogram::testing::random_state;
use stateogram::{compute_layout, render_strip, render_svg, RenderStyle};

/// Pulls `(x, y, width, height)` out of every `<rect class="bar" …/>`.
fn bar_rects(svg: &str) -> Vec<[f64; 4]> {
    svg.lines()
        .filter(|l| l.starts_with(r#"<rect class="bar""#))
        .map(|l| {
            let attr = |name: &str| -> f64 {
                let key = format!(" {name}=\"");
                let start = l.find(&key).unwrap() + key.len();
                let end = start + l[start..].find('"').unwrap();
                l[start..end].parse().unwrap()
            };
            [attr("x"), attr("y"), attr("width"), attr("height")]
        })
        .collect()
}

#[test]
fn identical_inputs_give_identical_bytes() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let style = RenderStyle::default();
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let s = random_state(&mut rng, n, 0.5);
        let a = render_svg(&compute_layout(&s), &style).unwrap();
        let b = render_svg(&compute_layout(&s.clone()), &style).unwrap();
        assert_eq!(a.as_bytes(), b.as_bytes());
    }
}

#[test]
fn geometry_audit_recovers_layout() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    let style = RenderStyle::default();
    let g = Geometry::new(&style);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let layout = compute_layout(&random_state(&mut rng, n, 0.5));
        let svg = render_svg(&layout, &style).unwrap();
        let rects = bar_rects(&svg);
        assert_eq!(rects.len(), layout.bars.len());
        for (bar, [x, y, w, h]) in layout.bars.iter().zip(&rects) {
            let angle = g.angle_of(x + w / 2.0);
            let top = g.p_of(*y);
            let bottom = g.p_of(y + h);
            assert!((angle - bar.angle).abs() < 1e-3, "{angle} vs {}", bar.angle);
            assert!((bottom - bar.y_offset).abs() < 1e-3);
            assert!((top - bottom - bar.height).abs() < 1e-3);
        }
        // stacked bands never overlap vertically
        let mut bands: Vec<(f64, f64)> = rects.iter().map(|r| (r[1], r[1] + r[3])).collect();
        bands.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for pair in bands.windows(2) {
            // each coordinate carries up to 5e-5 px of rounding
            assert!(pair[0].1 <= pair[1].0 + 2e-4);
        }
    }
}

#[test]
fn strip_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let layouts: Vec<_> = (0..4).map(|_| compute_layout(&random_state(&mut rng, 3, 0.3))).collect();
    let style = RenderStyle::default();
    assert_eq!(
        render_strip(&layouts, &style).unwrap(),
        render_strip(&layouts, &style).unwrap()
    );
}
