//! p-ary functions and Walsh spectra.
