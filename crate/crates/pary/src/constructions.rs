//! Construction families.
