fn main() {
    // CLI wired up once the library modules land.
}
