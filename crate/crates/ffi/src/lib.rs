//! C ABI over `harmshear`.
//!
//! Every fallible call returns an [`HsStatus`]; on failure a message is kept
//! per thread and can be read with [`hs_last_error_message`]. Objects are
//! opaque handles created by `*_new` or `*_sample` and released by the
//! matching `*_free`. Strings returned to the caller are freed with
//! [`hs_string_free`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use harmshear::mesh::{
    export_mesh, sample_surface_with_workers, DiskGrid, MeshFormat, SurfaceMesh,
};
use harmshear::special::{hyp2f1, Hyp2F1Params};
use harmshear::verify::{run_suite, SuiteOptions};
use harmshear::{DiskPoint, Error, HarmonicShear, MinimalLift, QuadratureConfig, ShearSpec};
use num_complex::Complex64;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The parameters name a shear that cannot be built or lifted.
    Unsupported = 3,
    /// A pole, a branch cut or a point outside a canonical surface's domain.
    Domain = 4,
    /// Quadrature or series failed to converge.
    Numeric = 5,
    Io = 6,
    /// A verification ran but at least one check failed.
    CheckFailed = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HsComplex {
    pub re: f64,
    pub im: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HsPoint3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HsMeshFormat {
    Obj = 0,
    Csv = 1,
    Json = 2,
}

/// A harmonic shear together with its lift, when the dilatation admits one.
pub struct HsShear {
    shear: HarmonicShear,
    lift: Option<MinimalLift>,
}

/// A sampled minimal-graph mesh.
pub struct HsMesh {
    mesh: SurfaceMesh,
}

impl From<HsComplex> for Complex64 {
    fn from(z: HsComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

impl From<Complex64> for HsComplex {
    fn from(z: Complex64) -> Self {
        HsComplex { re: z.re, im: z.im }
    }
}

impl From<HsMeshFormat> for MeshFormat {
    fn from(f: HsMeshFormat) -> Self {
        match f {
            HsMeshFormat::Obj => MeshFormat::Obj,
            HsMeshFormat::Csv => MeshFormat::Csv,
            HsMeshFormat::Json => MeshFormat::Json,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> HsStatus {
    match e {
        Error::InvalidParameter(_) | Error::PipelineMismatch(_) => HsStatus::InvalidArgument,
        Error::NotASquare(_)
        | Error::UnsupportedPair(_)
        | Error::EndpointParameter { .. }
        | Error::DegenerateShear { .. } => HsStatus::Unsupported,
        Error::DegenerateDenominator { .. }
        | Error::BranchCutHit { .. }
        | Error::PoleCollision { .. }
        | Error::PoleAtBoundary { .. }
        | Error::DomainViolation(_) => HsStatus::Domain,
        Error::Io(_) | Error::Json(_) => HsStatus::Io,
        Error::NodeFailure { source, .. } => status_of(source),
        _ => HsStatus::Numeric,
    }
}

struct Failure(HsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HsStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            HsStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(HsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(p: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(value);
    Ok(())
}

fn point(z: HsComplex) -> Result<DiskPoint, Failure> {
    Ok(DiskPoint::new(z.into())?)
}

fn make_shear(spec: ShearSpec, out: *mut *mut HsShear) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let cfg = QuadratureConfig::default();
    let shear = HarmonicShear::best(spec, cfg)?;
    let lift = if spec.dilatation().sqrt().is_ok() {
        Some(MinimalLift::best(spec, cfg)?)
    } else {
        None
    };
    unsafe { out.write(Box::into_raw(Box::new(HsShear { shear, lift }))) };
    Ok(())
}

/// Message of the last failed call on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Shear of `F_c` with dilatation `z(z + a)/(1 + az)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn hs_shear_new_fc_mobius(
    c: f64,
    a: f64,
    out: *mut *mut HsShear,
) -> HsStatus {
    guard(|| make_shear(ShearSpec::fc_mobius(c, a)?, out))
}

/// Shear of `F_c` with dilatation `z^k`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn hs_shear_new_fc_power(c: f64, k: u32, out: *mut *mut HsShear) -> HsStatus {
    guard(|| make_shear(ShearSpec::fc_power(c, k)?, out))
}

/// Shear of `F_n` with dilatation `z^n`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn hs_shear_new_epicycloid(n: u32, out: *mut *mut HsShear) -> HsStatus {
    guard(|| make_shear(ShearSpec::epicycloid(n)?, out))
}

/// Releases a shear. NULL is ignored.
///
/// # Safety
/// `shear` must come from an `hs_shear_new_*` call and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hs_shear_free(shear: *mut HsShear) {
    if !shear.is_null() {
        drop(Box::from_raw(shear));
    }
}

/// 1 when the shear collapses the boundary, 0 otherwise or for NULL.
///
/// # Safety
/// `shear` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_shear_is_degenerate(shear: *const HsShear) -> i32 {
    shear
        .as_ref()
        .map_or(0, |s| i32::from(s.shear.is_degenerate()))
}

/// 1 when the shear lifts to a minimal graph, 0 otherwise or for NULL.
///
/// # Safety
/// `shear` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_shear_has_lift(shear: *const HsShear) -> i32 {
    shear.as_ref().map_or(0, |s| i32::from(s.lift.is_some()))
}

/// Evaluates `h`, `g` and `f = h + conj(g)` at `z`. Any output may be NULL.
///
/// # Safety
/// `shear` must be a live handle; non-NULL outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_shear_eval(
    shear: *const HsShear,
    z: HsComplex,
    h: *mut HsComplex,
    g: *mut HsComplex,
    f: *mut HsComplex,
) -> HsStatus {
    guard(|| {
        let s = &deref(shear, "shear")?.shear;
        let z = point(z)?;
        let (hv, gv) = (s.h(z)?, s.g(z)?);
        if !h.is_null() {
            h.write(hv.into());
        }
        if !g.is_null() {
            g.write(gv.into());
        }
        if !f.is_null() {
            f.write((hv + gv.conj()).into());
        }
        Ok(())
    })
}

/// Point of the minimal graph above `z`.
///
/// # Safety
/// `shear` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hs_shear_lift(
    shear: *const HsShear,
    z: HsComplex,
    out: *mut HsPoint3,
) -> HsStatus {
    guard(|| {
        let lift = deref(shear, "shear")?.lift.as_ref().ok_or_else(|| {
            Failure(
                HsStatus::Unsupported,
                "dilatation is not a square; no lift".into(),
            )
        })?;
        let p = lift.eval(point(z)?)?;
        write_out(
            out,
            HsPoint3 {
                x1: p.x1,
                x2: p.x2,
                x3: p.x3,
            },
            "out",
        )
    })
}

/// Runs every applicable check; writes the JSON report to `*json_out`.
///
/// Returns `HS_STATUS_CHECK_FAILED` when the report is written but some
/// check failed. Free the string with [`hs_string_free`].
///
/// # Safety
/// `shear` must be a live handle and `json_out` writable.
#[no_mangle]
pub unsafe extern "C" fn hs_shear_verify(
    shear: *const HsShear,
    json_out: *mut *mut c_char,
) -> HsStatus {
    let mut passed = true;
    let status = guard(|| {
        let spec = *deref(shear, "shear")?.shear.spec();
        if json_out.is_null() {
            return Err(null("json_out"));
        }
        let report = run_suite(spec, &SuiteOptions::default())?;
        passed = report.all_passed();
        let json = CString::new(report.to_json()?).expect("JSON has no NUL");
        json_out.write(json.into_raw());
        Ok(())
    });
    if status == HsStatus::Ok && !passed {
        set_error("verification failed");
        return HsStatus::CheckFailed;
    }
    status
}

/// Gauss hypergeometric function `2F1(a, b; c; z)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_hyp2f1(
    a: HsComplex,
    b: HsComplex,
    c: HsComplex,
    z: HsComplex,
    out: *mut HsComplex,
) -> HsStatus {
    guard(|| {
        let v = hyp2f1(&Hyp2F1Params::new(a.into(), b.into(), c.into(), z.into())?)?;
        write_out(out, v.into(), "out")
    })
}

/// Samples the lift on a polar grid with a center node.
///
/// `workers = 0` uses the machine's parallelism; the result does not depend
/// on it.
///
/// # Safety
/// `shear` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hs_mesh_sample(
    shear: *const HsShear,
    n_circles: usize,
    n_rays: usize,
    r_max: f64,
    workers: usize,
    out: *mut *mut HsMesh,
) -> HsStatus {
    guard(|| {
        let s = deref(shear, "shear")?;
        if out.is_null() {
            return Err(null("out"));
        }
        if s.lift.is_none() {
            return Err(Failure(
                HsStatus::Unsupported,
                "dilatation is not a square; no lift".into(),
            ));
        }
        let grid = DiskGrid::new(n_circles, n_rays, r_max, true)?;
        let workers = (workers > 0).then_some(workers);
        let mesh = sample_surface_with_workers(
            *s.shear.spec(),
            &grid,
            &QuadratureConfig::default(),
            workers,
        )?;
        out.write(Box::into_raw(Box::new(HsMesh { mesh })));
        Ok(())
    })
}

/// Releases a mesh. NULL is ignored.
///
/// # Safety
/// `mesh` must come from [`hs_mesh_sample`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hs_mesh_free(mesh: *mut HsMesh) {
    if !mesh.is_null() {
        drop(Box::from_raw(mesh));
    }
}

/// Number of vertices, 0 for NULL.
///
/// # Safety
/// `mesh` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_mesh_vertex_count(mesh: *const HsMesh) -> usize {
    mesh.as_ref().map_or(0, |m| m.mesh.vertices.len())
}

/// Number of faces, 0 for NULL.
///
/// # Safety
/// `mesh` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_mesh_face_count(mesh: *const HsMesh) -> usize {
    mesh.as_ref().map_or(0, |m| m.mesh.faces.len())
}

/// Copies up to `len` vertices into `out`; writes the total count to `*written`.
///
/// # Safety
/// `mesh` must be a live handle, `out` must hold `len` points and `written`
/// must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn hs_mesh_vertices(
    mesh: *const HsMesh,
    out: *mut HsPoint3,
    len: usize,
    written: *mut usize,
) -> HsStatus {
    guard(|| {
        let m = &deref(mesh, "mesh")?.mesh;
        if out.is_null() && len > 0 {
            return Err(null("out"));
        }
        let n = len.min(m.vertices.len());
        for (i, p) in m.vertices.iter().take(n).enumerate() {
            out.add(i).write(HsPoint3 {
                x1: p.x1,
                x2: p.x2,
                x3: p.x3,
            });
        }
        if !written.is_null() {
            written.write(n);
        }
        Ok(())
    })
}

/// Writes the mesh to the UTF-8 path `path`.
///
/// # Safety
/// `mesh` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn hs_mesh_export(
    mesh: *const HsMesh,
    path: *const c_char,
    format: HsMeshFormat,
) -> HsStatus {
    guard(|| {
        let m = &deref(mesh, "mesh")?.mesh;
        if path.is_null() {
            return Err(null("path"));
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| Failure(HsStatus::InvalidArgument, "path is not UTF-8".into()))?;
        export_mesh(m, format.into(), path)?;
        Ok(())
    })
}
