//! Graph sources named on the command line.
//!
//! A spec is either a fixture name (`fig4_twin`), a small base graph
//! (`K4`, `P6`, `C5`, `S5` for the star of order 5, `E3` for the edgeless
//! graph), or `family:argument` such as `spider:2,2,1,1`, `family_6n7:K2`,
//! `book:3`, `path:7` or `corona:K2:2`.

use anyhow::{anyhow, bail, Context, Result};
use throttle_core::families::{self, Fixture};
use throttle_core::io::{parse_edge_lists, parse_graph6_lines};
use throttle_core::{Edge, Graph, VertexMap};

fn number(s: &str) -> Result<usize> {
    s.trim().parse().with_context(|| format!("expected a number, got `{s}`"))
}

fn plain(name: &str, graph: Graph) -> Fixture {
    Fixture::new(name, graph)
}

/// `K<n>`, `P<n>`, `C<n>`, `S<n>`, `E<n>` or a fixture name.
pub fn base_graph(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    let mut chars = spec.chars();
    if let (Some(head), rest) = (chars.next(), chars.as_str()) {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            let n = number(rest)?;
            return Ok(match head {
                'K' => families::complete(n)?,
                'P' => families::path(n)?,
                'C' => families::cycle(n)?,
                'S' => families::star(n)?,
                'E' => families::empty(n)?,
                _ => bail!("unknown base graph `{spec}`"),
            });
        }
    }
    Ok(families::fixture(spec)?.graph)
}

/// Resolves a spec to a graph with its named vertices and edges.
pub fn resolve(spec: &str) -> Result<Fixture> {
    let spec = spec.trim();
    let Some((family, arg)) = spec.split_once(':') else {
        if let Ok(fx) = families::fixture(spec) {
            return Ok(fx);
        }
        return base_graph(spec).map(|g| plain(spec, g)).map_err(|_| anyhow!("unknown graph `{spec}`"));
    };
    let fx = match family {
        "path" => plain(spec, families::path(number(arg)?)?),
        "complete" => plain(spec, families::complete(number(arg)?)?),
        "star" => {
            let mut fx = plain(spec, families::star(number(arg)?)?);
            fx.vertices.insert("c".into(), 0);
            fx
        }
        "cycle" => plain(spec, families::cycle(number(arg)?)?),
        "empty" => plain(spec, families::empty(number(arg)?)?),
        "spider" => {
            let legs = arg.split(',').map(number).collect::<Result<Vec<_>>>()?;
            let (g, c) = families::spider(&legs)?;
            let mut fx = plain(spec, g);
            fx.vertices.insert("c".into(), c);
            fx
        }
        "book" => {
            let (g, spine) = families::book(number(arg)?)?;
            let mut fx = plain(spec, g);
            fx.edges.insert("e".into(), spine);
            fx.vertices.insert("u".into(), spine.0);
            fx.vertices.insert("v".into(), spine.1);
            fx
        }
        "matched_sum" => {
            let r = number(arg)?;
            let mut fx = plain(spec, families::complete_matched_sum(r)?);
            fx.edges.insert("e".into(), (0, r));
            fx
        }
        "corona" => {
            let (base, r) = arg.rsplit_once(':').ok_or_else(|| anyhow!("expected corona:<base>:<r>"))?;
            plain(spec, families::corona(&base_graph(base)?, number(r)?)?)
        }
        "family_6n7" => families::family_6n7(&base_graph(arg)?)?,
        "ex11_57" => families::ex11_57(&base_graph(arg)?)?,
        "corona_tower" => families::corona_tower(&base_graph(arg)?)?,
        "star_plus_edge" => families::star_plus_edge(number(arg)?)?,
        _ => bail!("unknown graph family `{family}`"),
    };
    Ok(fx)
}

/// Reads every graph in `text`; `format` is `graph6` or `edgelist`.
pub fn ingest(text: &str, format: &str) -> Result<Vec<Graph>> {
    match format {
        "graph6" | "g6" => Ok(parse_graph6_lines(text)?),
        "edgelist" | "edges" => Ok(parse_edge_lists(text)?),
        _ => bail!("unknown format `{format}` (expected graph6 or edgelist)"),
    }
}

/// A vertex given by fixture name or numeric label.
pub fn vertex(fx: &Fixture, token: &str) -> Result<usize> {
    match fx.vertices.get(token) {
        Some(&v) => Ok(v),
        None => {
            let v = number(token).with_context(|| format!("no vertex named `{token}`"))?;
            if v >= fx.graph.order() {
                bail!("vertex {v} out of range for order {}", fx.graph.order());
            }
            Ok(v)
        }
    }
}

/// An edge given by fixture name or as `u,v` / `u-v` (names or labels).
pub fn edge(fx: &Fixture, token: &str) -> Result<Edge> {
    if let Some(&e) = fx.edges.get(token) {
        return Ok(e);
    }
    let (a, b) =
        token.split_once([',', '-']).ok_or_else(|| anyhow!("no edge named `{token}` (use a name or `u,v`)"))?;
    Ok((vertex(fx, a)?, vertex(fx, b)?))
}

/// Graph operation applied after resolving a source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operation {
    DeleteVertex(String),
    DeleteEdge(String),
    Contract(String),
    Subdivide(String),
}

/// Applies `op`, carrying the names of surviving vertices across.
pub fn apply(fx: &Fixture, op: &Operation) -> Result<Fixture> {
    let carry = |graph: Graph, map: Option<&VertexMap>, suffix: &str| {
        let mut out = Fixture::new(format!("{}{suffix}", fx.name), graph);
        for (name, &v) in &fx.vertices {
            let image = match map {
                Some(m) => m.image(v),
                None => Some(v),
            };
            if let Some(w) = image {
                out.vertices.insert(name.clone(), w);
            }
        }
        out
    };
    Ok(match op {
        Operation::DeleteVertex(t) => {
            let (g, map) = fx.graph.delete_vertex(vertex(fx, t)?)?;
            carry(g, Some(&map), &format!(" - {t}"))
        }
        Operation::DeleteEdge(t) => carry(fx.graph.delete_edge(edge(fx, t)?)?, None, &format!(" - {t}")),
        Operation::Contract(t) => {
            let (g, map) = fx.graph.contract_edge(edge(fx, t)?)?;
            let mut out = carry(g, Some(&map), &format!(" / {t}"));
            out.vertices.insert("y_e".into(), map.contracted_vertex().expect("contraction records y_e"));
            out
        }
        Operation::Subdivide(t) => {
            let (g, map) = fx.graph.subdivide_edge(edge(fx, t)?)?;
            let mut out = carry(g, Some(&map), &format!(" subdivided at {t}"));
            out.vertices.insert("z_e".into(), map.new_vertex().expect("subdivision records z_e"));
            out
        }
    })
}
