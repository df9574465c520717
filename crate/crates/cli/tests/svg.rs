use clap::Parser;
use minksimplex::circumcenter::example_2_2_fixture;
use minksimplex::scalar::rat;
use minksimplex::{circumcenters, Norm, PolytopeBall, Scalar, Simplex, Vector};
use minksimplex_cli::args::Cli;
use minksimplex_cli::execute;
use minksimplex_cli::scene::{nums, SceneFile};

fn render(scene: &SceneFile) -> String {
    let cli = Cli::try_parse_from(["minksimplex", "render"]).unwrap();
    execute(&cli, &scene.to_json()).unwrap()
}

fn points(attr: &str) -> Vec<[f64; 2]> {
    attr.split_whitespace()
        .map(|p| {
            let (x, y) = p.split_once(',').unwrap();
            [x.parse().unwrap(), y.parse().unwrap()]
        })
        .collect()
}

fn near(a: [f64; 2], b: [f64; 2]) -> bool {
    (a[0] - b[0]).abs() <= 1e-9 && (a[1] - b[1]).abs() <= 1e-9
}

/// Canvas position of a world point under the `scene` group transform.
fn to_canvas(transform: &str, p: [f64; 2]) -> [f64; 2] {
    let inner = transform.trim_start_matches("matrix(").trim_end_matches(')');
    let m: Vec<f64> = inner.split_whitespace().map(|x| x.parse().unwrap()).collect();
    [m[0] * p[0] + m[2] * p[1] + m[4], m[1] * p[0] + m[3] * p[1] + m[5]]
}

#[test]
fn planar_scene_geometry() {
    let t = Simplex::new(vec![
        Vector::from_i64s(&[0, 0]),
        Vector::from_i64s(&[2, 0]),
        Vector::new(vec![rat(1, 2), rat(3, 1)]),
    ])
    .unwrap();
    let sq = PolytopeBall::square();
    let svg = render(&SceneFile::from_exact(&sq, Some(&t)));
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let by_id = |id: &str| doc.descendants().find(|n| n.attribute("id") == Some(id)).unwrap();

    for (i, a) in t.vertices().iter().enumerate() {
        let c = by_id(&format!("A{i}"));
        let xy = [c.attribute("cx").unwrap().parse().unwrap(), c.attribute("cy").unwrap().parse().unwrap()];
        assert!(near(xy, [a[0].to_f64(), a[1].to_f64()]));
    }
    let set = circumcenters(&t, &sq).unwrap();
    let w = &set.witnesses[0];
    let m = by_id("M");
    assert!(near(
        [m.attribute("cx").unwrap().parse().unwrap(), m.attribute("cy").unwrap().parse().unwrap()],
        [w.center[0].to_f64(), w.center[1].to_f64()]
    ));
    // The first translate passes through every vertex.
    let ball = points(by_id("ball-0").attribute("points").unwrap());
    let c = [w.center[0].to_f64(), w.center[1].to_f64()];
    for a in t.vertices() {
        let rel = [a[0].to_f64() - c[0], a[1].to_f64() - c[1]];
        let g = rel[0].abs().max(rel[1].abs());
        assert!((g - w.radius.to_f64()).abs() <= 1e-9);
    }
    assert!(ball.iter().all(|p| ((p[0] - c[0]).abs().max((p[1] - c[1]).abs()) - w.radius.to_f64()).abs() <= 1e-9));
    // Medial triangle: the edge midpoints.
    let medial = points(by_id("medial").attribute("points").unwrap());
    assert_eq!(medial.len(), 3);
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let mid = t.vertex(i).midpoint(t.vertex(j));
        assert!(medial.iter().any(|p| near(*p, [mid[0].to_f64(), mid[1].to_f64()])));
    }
    // Labels sit next to their markers on the canvas.
    let transform = by_id("scene").attribute("transform").unwrap();
    let label = doc.descendants().find(|n| n.has_tag_name("text") && n.text() == Some("A1")).unwrap();
    let at = to_canvas(transform, [2.0, 0.0]);
    let lx: f64 = label.attribute("x").unwrap().parse().unwrap();
    let ly: f64 = label.attribute("y").unwrap().parse().unwrap();
    assert!((lx - at[0] - 5.0).abs() < 1e-9 && (ly - at[1] + 5.0).abs() < 1e-9);
}

#[test]
fn cube_fixture_projection_shows_several_translates() {
    let (t, cube) = example_2_2_fixture();
    let mut scene = SceneFile::from_exact(&cube, Some(&t));
    let rows: [Vector<minksimplex::Rational>; 2] = [Vector::from_i64s(&[1, 0, 0]), Vector::from_i64s(&[0, 0, 1])];
    scene.projection = Some(rows.iter().map(nums).collect());
    let svg = render(&scene);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let balls: Vec<Vec<[f64; 2]>> = doc
        .descendants()
        .filter(|n| n.attribute("class") == Some("ball"))
        .map(|n| points(n.attribute("points").unwrap()))
        .collect();
    assert!(balls.len() >= 2);
    // Every projected vertex lies on the boundary of every drawn translate.
    for b in &balls {
        let (lo, hi) = b.iter().fold(([f64::MAX; 2], [f64::MIN; 2]), |(lo, hi), p| {
            ([lo[0].min(p[0]), lo[1].min(p[1])], [hi[0].max(p[0]), hi[1].max(p[1])])
        });
        for a in t.vertices() {
            let p = [a[0].to_f64(), a[2].to_f64()];
            let inside = (lo[0] - 1e-9..=hi[0] + 1e-9).contains(&p[0]) && (lo[1] - 1e-9..=hi[1] + 1e-9).contains(&p[1]);
            let on_edge = [p[0] - lo[0], hi[0] - p[0], p[1] - lo[1], hi[1] - p[1]].iter().any(|x| x.abs() <= 1e-9);
            assert!(inside && on_edge, "{p:?} {b:?}");
        }
    }
    // Centers of the translates differ along CD only.
    let centers: Vec<[f64; 2]> = balls
        .iter()
        .map(|b| {
            let n = b.len() as f64;
            [b.iter().map(|p| p[0]).sum::<f64>() / n, b.iter().map(|p| p[1]).sum::<f64>() / n]
        })
        .collect();
    assert!(centers.iter().all(|c| c[0].abs() <= 1e-9));
    assert!(cube.gauge(&(t.vertex(3) - t.vertex(2))) > rat(0, 1));
}

#[test]
fn smooth_scene_renders() {
    let scene = SceneFile::parse(
        r#"{"dimension": 2, "ball": {"type": "pnorm", "p": 3}, "simplex": [[0, 0], [1.5, 0], [0.25, 1]]}"#,
    )
    .unwrap();
    let svg = render(&scene);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.root_element().attribute("version"), Some("1.1"));
    assert!(doc.descendants().any(|n| n.attribute("id") == Some("ball-0")));
}
