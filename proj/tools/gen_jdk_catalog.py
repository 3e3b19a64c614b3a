#!/usr/bin/env python3
"""Write data/jdk_catalog.txt: one fully qualified JDK type or member per line.

No JDK is assumed to be installed, so the class list below is curated from the
public Java SE API index (the commonly used packages). Members are listed with a
trailing "()" and are restricted to multi-word camelCase names so that short
generic verbs (get, add, size) never count as JDK nouns.
"""
import sys

TYPES = {
    "java.lang": """AbstractMethodError Appendable ArithmeticException ArrayIndexOutOfBoundsException
        ArrayStoreException AssertionError AutoCloseable Boolean Byte CharSequence Character Class
        ClassCastException ClassLoader ClassNotFoundException CloneNotSupportedException Cloneable
        Comparable Deprecated Double Enum Error Exception Float FunctionalInterface IllegalAccessException
        IllegalArgumentException IllegalMonitorStateException IllegalStateException
        IndexOutOfBoundsException InstantiationException Integer InterruptedException Iterable
        LinkageError Long Math NegativeArraySizeException NoSuchFieldException NoSuchMethodException
        NullPointerException Number NumberFormatException Object OutOfMemoryError Override Package
        Process ProcessBuilder Readable Record Runnable Runtime RuntimeException SafeVarargs
        SecurityException Short StackOverflowError StackTraceElement StrictMath String StringBuffer
        StringBuilder StringIndexOutOfBoundsException SuppressWarnings System Thread ThreadGroup
        ThreadLocal Throwable UnsupportedOperationException Void""",
    "java.lang.reflect": """AccessibleObject Array Constructor Field InvocationHandler
        InvocationTargetException Method Modifier Parameter ParameterizedType Proxy Type""",
    "java.lang.annotation": """Annotation Documented ElementType Inherited Retention RetentionPolicy Target""",
    "java.util": """AbstractCollection AbstractList AbstractMap AbstractQueue AbstractSet ArrayDeque
        ArrayList Arrays Base64 BitSet Calendar Collection Collections Comparator
        ConcurrentModificationException Currency Date Deque Dictionary DoubleSummaryStatistics
        EnumMap EnumSet Enumeration EventListener EventObject Formatter GregorianCalendar HashMap
        HashSet Hashtable IdentityHashMap IllegalFormatException InputMismatchException
        IntSummaryStatistics Iterator LinkedHashMap LinkedHashSet LinkedList List ListIterator Locale
        LongSummaryStatistics Map MissingResourceException NavigableMap NavigableSet
        NoSuchElementException Objects Observable Observer Optional OptionalDouble OptionalInt
        OptionalLong PriorityQueue Properties PropertyResourceBundle Queue Random RandomAccess
        ResourceBundle Scanner ServiceLoader Set SimpleTimeZone SortedMap SortedSet Spliterator
        Spliterators SplittableRandom Stack StringJoiner StringTokenizer Timer TimerTask TimeZone
        TreeMap TreeSet UUID Vector WeakHashMap""",
    "java.util.concurrent": """ArrayBlockingQueue BlockingDeque BlockingQueue BrokenBarrierException
        Callable CancellationException CompletableFuture CompletionService CompletionStage
        ConcurrentHashMap ConcurrentLinkedDeque ConcurrentLinkedQueue ConcurrentMap
        ConcurrentSkipListMap ConcurrentSkipListSet CopyOnWriteArrayList CopyOnWriteArraySet
        CountDownLatch CyclicBarrier DelayQueue Delayed Exchanger ExecutionException Executor
        ExecutorCompletionService ExecutorService Executors ForkJoinPool ForkJoinTask Future
        FutureTask LinkedBlockingDeque LinkedBlockingQueue Phaser PriorityBlockingQueue
        RecursiveAction RecursiveTask RejectedExecutionException ScheduledExecutorService
        ScheduledFuture ScheduledThreadPoolExecutor Semaphore SynchronousQueue ThreadFactory
        ThreadLocalRandom ThreadPoolExecutor TimeUnit TimeoutException""",
    "java.util.concurrent.atomic": """AtomicBoolean AtomicInteger AtomicIntegerArray AtomicLong
        AtomicLongArray AtomicReference AtomicReferenceArray DoubleAdder LongAdder""",
    "java.util.concurrent.locks": """Condition Lock LockSupport ReadWriteLock ReentrantLock
        ReentrantReadWriteLock StampedLock""",
    "java.util.function": """BiConsumer BiFunction BiPredicate BinaryOperator BooleanSupplier Consumer
        DoubleFunction DoubleUnaryOperator Function IntBinaryOperator IntConsumer IntFunction
        IntPredicate IntSupplier IntUnaryOperator LongFunction Predicate Supplier ToDoubleFunction
        ToIntFunction ToLongFunction UnaryOperator""",
    "java.util.stream": """Collector Collectors DoubleStream IntStream LongStream Stream StreamSupport""",
    "java.util.regex": """MatchResult Matcher Pattern PatternSyntaxException""",
    "java.util.zip": """Adler32 CRC32 Checksum DataFormatException Deflater DeflaterOutputStream
        GZIPInputStream GZIPOutputStream Inflater InflaterInputStream ZipEntry ZipException ZipFile
        ZipInputStream ZipOutputStream""",
    "java.util.jar": """Attributes JarEntry JarFile JarInputStream JarOutputStream Manifest""",
    "java.util.logging": """ConsoleHandler FileHandler Handler Level LogManager LogRecord Logger
        SimpleFormatter""",
    "java.util.prefs": """Preferences""",
    "java.io": """BufferedInputStream BufferedOutputStream BufferedReader BufferedWriter
        ByteArrayInputStream ByteArrayOutputStream CharArrayReader CharArrayWriter Closeable Console
        DataInput DataInputStream DataOutput DataOutputStream EOFException Externalizable File
        FileDescriptor FileFilter FileInputStream FileNotFoundException FileOutputStream FileReader
        FileWriter FilenameFilter FilterInputStream FilterOutputStream Flushable IOException
        InputStream InputStreamReader InterruptedIOException InvalidClassException
        LineNumberReader NotSerializableException ObjectInput ObjectInputStream ObjectOutput
        ObjectOutputStream OutputStream OutputStreamWriter PipedInputStream PipedOutputStream
        PrintStream PrintWriter PushbackInputStream RandomAccessFile Reader SequenceInputStream
        Serializable StreamTokenizer StringReader StringWriter UncheckedIOException
        UnsupportedEncodingException Writer""",
    "java.nio": """Buffer BufferOverflowException BufferUnderflowException ByteBuffer ByteOrder
        CharBuffer DoubleBuffer FloatBuffer IntBuffer LongBuffer MappedByteBuffer ShortBuffer""",
    "java.nio.channels": """AsynchronousFileChannel AsynchronousSocketChannel Channel Channels
        DatagramChannel FileChannel FileLock Pipe ReadableByteChannel SelectionKey Selector
        ServerSocketChannel SocketChannel WritableByteChannel""",
    "java.nio.charset": """Charset CharsetDecoder CharsetEncoder StandardCharsets""",
    "java.nio.file": """AccessDeniedException DirectoryNotEmptyException DirectoryStream
        FileAlreadyExistsException FileSystem FileSystems FileVisitResult FileVisitor Files
        LinkOption NoSuchFileException OpenOption Path PathMatcher Paths SimpleFileVisitor
        StandardCopyOption StandardOpenOption WatchEvent WatchKey WatchService""",
    "java.nio.file.attribute": """BasicFileAttributes DosFileAttributes FileAttribute FileTime
        PosixFileAttributes PosixFilePermission PosixFilePermissions""",
    "java.net": """ConnectException DatagramPacket DatagramSocket HttpCookie HttpURLConnection
        Inet4Address Inet6Address InetAddress InetSocketAddress MalformedURLException
        MulticastSocket NetworkInterface Proxy ServerSocket Socket SocketAddress SocketException
        SocketTimeoutException URI URISyntaxException URL URLClassLoader URLConnection URLDecoder
        URLEncoder UnknownHostException""",
    "java.net.http": """HttpClient HttpHeaders HttpRequest HttpResponse""",
    "java.math": """BigDecimal BigInteger MathContext RoundingMode""",
    "java.text": """BreakIterator ChoiceFormat Collator DateFormat DecimalFormat
        DecimalFormatSymbols Format MessageFormat Normalizer NumberFormat ParseException
        ParsePosition SimpleDateFormat""",
    "java.time": """Clock DateTimeException DayOfWeek Duration Instant LocalDate LocalDateTime
        LocalTime Month MonthDay OffsetDateTime OffsetTime Period Year YearMonth ZoneId
        ZoneOffset ZonedDateTime""",
    "java.time.format": """DateTimeFormatter DateTimeFormatterBuilder DateTimeParseException
        FormatStyle""",
    "java.time.temporal": """ChronoField ChronoUnit Temporal TemporalAdjusters TemporalUnit""",
    "java.sql": """Array Blob CallableStatement Clob Connection DatabaseMetaData Driver
        DriverManager PreparedStatement ResultSet ResultSetMetaData SQLException SQLWarning
        Savepoint Statement Timestamp Types""",
    "java.security": """DigestInputStream GeneralSecurityException InvalidKeyException Key
        KeyFactory KeyPair KeyPairGenerator KeyStore MessageDigest NoSuchAlgorithmException
        PrivateKey PublicKey SecureRandom Security Signature""",
    "java.security.cert": """Certificate CertificateException CertificateFactory X509Certificate""",
    "java.security.spec": """KeySpec PKCS8EncodedKeySpec X509EncodedKeySpec""",
    "java.beans": """PropertyChangeEvent PropertyChangeListener PropertyChangeSupport""",
    "java.awt": """BorderLayout Color Component Container Desktop Dimension FlowLayout Font
        Graphics Graphics2D GridBagConstraints GridBagLayout GridLayout Image Insets Point
        Rectangle Robot Toolkit""",
    "java.awt.datatransfer": """Clipboard DataFlavor StringSelection Transferable""",
    "java.awt.event": """ActionEvent ActionListener KeyEvent KeyListener MouseAdapter MouseEvent
        MouseListener WindowAdapter WindowEvent""",
    "java.awt.image": """BufferedImage RenderedImage""",
    "javax.imageio": """ImageIO""",
    "javax.swing": """AbstractAction Action BorderFactory Box ImageIcon JButton JCheckBox
        JComboBox JComponent JDialog JFileChooser JFrame JLabel JList JMenu JMenuBar JMenuItem
        JOptionPane JPanel JPasswordField JScrollPane JSplitPane JTabbedPane JTable JTextArea
        JTextField JTree SwingUtilities SwingWorker Timer UIManager""",
    "javax.crypto": """Cipher KeyGenerator Mac SecretKey SecretKeyFactory""",
    "javax.crypto.spec": """IvParameterSpec PBEKeySpec SecretKeySpec""",
    "javax.net.ssl": """HostnameVerifier HttpsURLConnection KeyManagerFactory SSLContext
        SSLSocket SSLSocketFactory TrustManager TrustManagerFactory X509TrustManager""",
    "javax.xml.parsers": """DocumentBuilder DocumentBuilderFactory ParserConfigurationException
        SAXParser SAXParserFactory""",
    "javax.xml.transform": """OutputKeys Transformer TransformerException TransformerFactory""",
    "javax.xml.transform.dom": """DOMSource""",
    "javax.xml.transform.stream": """StreamResult StreamSource""",
    "javax.xml.xpath": """XPath XPathConstants XPathExpression XPathFactory""",
    "javax.sql": """DataSource""",
    "javax.script": """ScriptEngine ScriptEngineManager""",
}

MEMBERS = """java.io.BufferedReader.readLine java.io.File.getAbsolutePath java.io.File.getName
    java.io.File.getParentFile java.io.File.isDirectory java.io.File.listFiles java.io.File.mkdirs
    java.io.File.createNewFile java.io.InputStream.readAllBytes java.io.OutputStream.flush
    java.io.PrintStream.println java.lang.Character.isDigit java.lang.Character.isLetter
    java.lang.Character.isWhitespace java.lang.Character.toUpperCase java.lang.Character.toLowerCase
    java.lang.Class.forName java.lang.Class.getDeclaredMethod java.lang.Class.getMethod
    java.lang.Class.getSimpleName java.lang.Class.newInstance java.lang.Double.parseDouble
    java.lang.Integer.parseInt java.lang.Integer.toBinaryString java.lang.Integer.toHexString
    java.lang.Integer.valueOf java.lang.Long.parseLong java.lang.Object.hashCode
    java.lang.Object.getClass java.lang.Object.toString java.lang.Runtime.getRuntime
    java.lang.Runtime.availableProcessors java.lang.String.charAt java.lang.String.compareTo
    java.lang.String.endsWith java.lang.String.equalsIgnoreCase java.lang.String.getBytes
    java.lang.String.indexOf java.lang.String.isEmpty java.lang.String.lastIndexOf
    java.lang.String.replaceAll java.lang.String.startsWith java.lang.String.substring
    java.lang.String.toCharArray java.lang.String.toLowerCase java.lang.String.toUpperCase
    java.lang.String.valueOf java.lang.StringBuilder.toString java.lang.System.arraycopy
    java.lang.System.currentTimeMillis java.lang.System.getProperty java.lang.System.getenv
    java.lang.System.lineSeparator java.lang.System.nanoTime java.lang.Thread.currentThread
    java.lang.Thread.getStackTrace java.lang.Throwable.getMessage java.lang.Throwable.getStackTrace
    java.lang.Throwable.printStackTrace java.lang.reflect.Method.invoke java.nio.file.Files.readAllBytes
    java.nio.file.Files.readAllLines java.nio.file.Files.newBufferedReader java.nio.file.Files.createDirectories
    java.util.Arrays.asList java.util.Arrays.copyOf java.util.Arrays.copyOfRange java.util.Arrays.deepToString
    java.util.Collections.emptyList java.util.Collections.unmodifiableList java.util.List.subList
    java.util.Map.entrySet java.util.Map.keySet java.util.Map.containsKey java.util.Map.getOrDefault
    java.util.Map.putIfAbsent java.util.Collection.isEmpty java.util.Collection.toArray
    java.util.Iterator.hasNext java.util.Scanner.nextLine java.util.Scanner.nextInt
    java.util.Scanner.hasNextLine java.util.stream.Stream.flatMap java.util.regex.Pattern.compile
    java.util.regex.Matcher.replaceAll java.security.MessageDigest.getInstance""".split()


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "data/jdk_catalog.txt"
    lines = set()
    for pkg, names in TYPES.items():
        for name in names.split():
            lines.add(f"{pkg}.{name}")
    for m in MEMBERS:
        lines.add(m + "()")
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write("# Fully qualified JDK types and selected members, one per line.\n")
        f.write("# Generated by tools/gen_jdk_catalog.py.\n")
        for line in sorted(lines):
            f.write(line + "\n")


if __name__ == "__main__":
    main()
