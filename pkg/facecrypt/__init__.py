# facecrypt - feature-aware chaotic image cipher
