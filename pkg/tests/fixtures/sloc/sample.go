package main

import "fmt"

// report prints a labelled count.
func report(label string, n int) {
	fmt.Printf("%s: %d\n", label, n) // stdout
}

/* unused for now */
func main() { report("files", 3) }
