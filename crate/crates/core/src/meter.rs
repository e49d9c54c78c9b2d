/// Work and memory accounting for the `*_metered` variants of analysis
/// operations.
///
/// `visits` counts elements touched (run entries for row passes, pixel pops
/// for column scans). `peak_working` is the largest number of scratch
/// integers/bits held at once, excluding the returned result.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct WorkMeter {
    pub visits: usize,
    pub peak_working: usize,
}

impl WorkMeter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn visit(&mut self, n: usize) {
        self.visits += n;
    }

    #[inline]
    pub fn working(&mut self, n: usize) {
        self.peak_working = self.peak_working.max(n);
    }
}
