//! Row-banded multi-threaded descriptor evaluation.

use speckle_core::{descriptors, ActivityMap, DescriptorSpec, Error, FrameStack};

/// Computes a descriptor map with a fixed number of worker threads.
///
/// The image is split into contiguous row bands, one per worker. Each pixel's
/// temporal sum is evaluated sequentially inside a single worker, so the
/// result is bit-identical for every thread count and identical to
/// [`descriptors::compute`].
pub fn compute_with_threads(
    stack: &FrameStack,
    spec: &DescriptorSpec,
    threads: usize,
) -> Result<ActivityMap, Error> {
    let threads = threads.max(1).min(stack.height());
    if threads == 1 {
        return descriptors::compute(stack, spec);
    }
    spec.validate_for(stack)?;

    let width = stack.width();
    let band_rows = stack.height().div_ceil(threads);
    let mut values = vec![0.0; stack.pixel_count()];

    std::thread::scope(|scope| -> Result<(), Error> {
        let mut workers = Vec::with_capacity(threads);
        for (band, chunk) in values.chunks_mut(band_rows * width).enumerate() {
            let start = band * band_rows;
            let rows = start..start + chunk.len() / width;
            workers.push(scope.spawn(move || descriptors::compute_rows(stack, spec, rows, chunk)));
        }
        for worker in workers {
            worker.join().expect("descriptor worker panicked")?;
        }
        Ok(())
    })?;

    ActivityMap::new(
        stack.height(),
        stack.width(),
        spec.method(),
        spec.effective_window(),
        values,
    )
}
