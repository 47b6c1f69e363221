//! Polar disk grids, lifted surface meshes and their file formats.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::DiskPoint;
use crate::lift::{MinimalGraphPoint, MinimalLift};
use crate::quadrature::QuadratureConfig;
use crate::shear::{Provenance, ShearSpec};

/// Concentric circles `r_i = r_max·i/n_circles` crossed by `n_rays` rays.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGrid")]
pub struct DiskGrid {
    n_circles: usize,
    n_rays: usize,
    r_max: f64,
    include_center: bool,
}

#[derive(Deserialize)]
struct RawGrid {
    n_circles: usize,
    n_rays: usize,
    r_max: f64,
    include_center: bool,
}

impl TryFrom<RawGrid> for DiskGrid {
    type Error = Error;
    fn try_from(g: RawGrid) -> Result<Self> {
        Self::new(g.n_circles, g.n_rays, g.r_max, g.include_center)
    }
}

impl DiskGrid {
    pub fn new(n_circles: usize, n_rays: usize, r_max: f64, include_center: bool) -> Result<Self> {
        if n_circles < 1 || n_rays < 3 {
            return Err(Error::InvalidParameter(format!(
                "grid needs n_circles >= 1 and n_rays >= 3, got {n_circles}x{n_rays}"
            )));
        }
        if !(r_max > 0.0 && r_max < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "r_max must lie in (0, 1), got {r_max}"
            )));
        }
        Ok(Self {
            n_circles,
            n_rays,
            r_max,
            include_center,
        })
    }

    pub fn n_circles(&self) -> usize {
        self.n_circles
    }

    pub fn n_rays(&self) -> usize {
        self.n_rays
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn include_center(&self) -> bool {
        self.include_center
    }

    pub fn node_count(&self) -> usize {
        self.n_circles * self.n_rays + usize::from(self.include_center)
    }

    /// Index of ring `i` (1-based), ray `j`.
    pub fn index(&self, ring: usize, ray: usize) -> usize {
        (ring - 1) * self.n_rays + ray % self.n_rays
    }

    /// Index of the center node, if present; it comes after every ring node.
    pub fn center_index(&self) -> Option<usize> {
        self.include_center.then_some(self.n_circles * self.n_rays)
    }

    pub fn nodes(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.node_count());
        for i in 1..=self.n_circles {
            let r = self.r_max * i as f64 / self.n_circles as f64;
            for j in 0..self.n_rays {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / self.n_rays as f64;
                out.push(Complex64::from_polar(r, theta));
            }
        }
        if self.include_center {
            out.push(Complex64::new(0.0, 0.0));
        }
        out
    }

    /// Quads between adjacent rings, triangles fanning from the center.
    pub fn faces(&self) -> Vec<Face> {
        let mut faces = Vec::new();
        if let Some(c) = self.center_index() {
            for j in 0..self.n_rays {
                faces.push(Face::Tri([c, self.index(1, j), self.index(1, j + 1)]));
            }
        }
        for i in 1..self.n_circles {
            for j in 0..self.n_rays {
                faces.push(Face::Quad([
                    self.index(i, j),
                    self.index(i + 1, j),
                    self.index(i + 1, j + 1),
                    self.index(i, j + 1),
                ]));
            }
        }
        faces
    }
}

impl FromStr for DiskGrid {
    type Err = Error;

    /// `CxR`, e.g. `16x64`; radius 0.95 with a center node.
    fn from_str(s: &str) -> Result<Self> {
        let (c, r) = s.split_once(['x', 'X']).ok_or_else(|| {
            Error::InvalidParameter(format!("grid must look like 16x64, got {s:?}"))
        })?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad grid dimension {t:?}")))
        };
        Self::new(parse(c)?, parse(r)?, 0.95, true)
    }
}

/// Grid nodes in ring-major order, center last.
pub fn make_grid(g: &DiskGrid) -> Vec<DiskPoint> {
    g.nodes()
        .into_iter()
        .map(DiskPoint::new_unchecked)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Face {
    Tri([usize; 3]),
    Quad([usize; 4]),
}

impl Face {
    pub fn indices(&self) -> &[usize] {
        match self {
            Face::Tri(f) => f,
            Face::Quad(f) => f,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurfaceMesh {
    pub spec: ShearSpec,
    pub grid: DiskGrid,
    pub vertices: Vec<MinimalGraphPoint>,
    pub faces: Vec<Face>,
    pub provenance: Provenance,
}

impl SurfaceMesh {
    /// Number of distinct undirected edges.
    pub fn edge_count(&self) -> usize {
        let mut edges: Vec<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|f| {
                let idx = f.indices();
                (0..idx.len()).map(move |k| {
                    let (a, b) = (idx[k], idx[(k + 1) % idx.len()]);
                    (a.min(b), a.max(b))
                })
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }
}

/// Lifts every grid node with the default worker pool.
pub fn sample_surface(
    spec: ShearSpec,
    grid: &DiskGrid,
    cfg: &QuadratureConfig,
) -> Result<SurfaceMesh> {
    sample_surface_with_workers(spec, grid, cfg, None)
}

/// Lifts every grid node on `workers` threads; vertex order never depends on it.
pub fn sample_surface_with_workers(
    spec: ShearSpec,
    grid: &DiskGrid,
    cfg: &QuadratureConfig,
    workers: Option<usize>,
) -> Result<SurfaceMesh> {
    let lift = MinimalLift::best(spec, *cfg)?;
    let nodes = grid.nodes();
    let run = || -> Result<Vec<MinimalGraphPoint>> {
        nodes
            .par_iter()
            .enumerate()
            .map(|(index, &z)| {
                lift.eval_at(z).map_err(|e| Error::NodeFailure {
                    index,
                    z,
                    source: Box::new(e),
                })
            })
            .collect()
    };
    let vertices = match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    Ok(SurfaceMesh {
        spec,
        grid: *grid,
        vertices,
        faces: grid.faces(),
        provenance: lift.provenance(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Csv,
    Json,
}

impl FromStr for MeshFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "obj" => Ok(Self::Obj),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            _ => Err(Error::InvalidParameter(format!("unknown format {s:?}"))),
        }
    }
}

/// Writes `mesh` in `format`. Floats use the shortest round-trip decimal form.
pub fn write_mesh<W: Write>(mesh: &SurfaceMesh, format: MeshFormat, mut w: W) -> Result<()> {
    match format {
        MeshFormat::Obj => {
            for v in &mesh.vertices {
                writeln!(w, "v {} {} {}", v.x1, v.x2, v.x3)?;
            }
            for f in &mesh.faces {
                write!(w, "f")?;
                for i in f.indices() {
                    write!(w, " {}", i + 1)?;
                }
                writeln!(w)?;
            }
        }
        MeshFormat::Csv => {
            writeln!(w, "x1,x2,x3,re_z,im_z")?;
            for (v, z) in mesh.vertices.iter().zip(mesh.grid.nodes()) {
                writeln!(w, "{},{},{},{},{}", v.x1, v.x2, v.x3, z.re, z.im)?;
            }
        }
        MeshFormat::Json => {
            serde_json::to_writer_pretty(&mut w, mesh)?;
            writeln!(w)?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn export_mesh(mesh: &SurfaceMesh, format: MeshFormat, path: impl AsRef<Path>) -> Result<()> {
    write_mesh(mesh, format, BufWriter::new(File::create(path)?))
}

pub fn import_mesh_json(path: impl AsRef<Path>) -> Result<SurfaceMesh> {
    let file = File::open(path)?;
    Ok(serde_json::from_reader(std::io::BufReader::new(file))?)
}
